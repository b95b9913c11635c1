import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from chromsym.graphs import claw_graph
from chromsym.kernels import set_backend
from chromsym.stable import count_types


RUN_SLOW = bool(os.environ.get("CHROMSYM_SLOW"))

slow = pytest.mark.skipif(not RUN_SLOW, reason="set CHROMSYM_SLOW=1 to run")


@pytest.fixture(scope="session")
def warm_kernels():
    """Force kernel compilation before anything is timed."""
    count_types(claw_graph())
    from chromsym.stable import count_of_type

    count_of_type(claw_graph(), (3, 1))
    return True


@pytest.fixture(params=["numba", "python"])
def kernel_backend(request):
    """Run a test under each kernel backend, restoring the default after."""
    set_backend(request.param)
    yield request.param
    set_backend("auto")
