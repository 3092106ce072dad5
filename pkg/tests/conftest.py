import pytest

from casimir_spheres import BoundaryCondition, BoundaryPair

PC = BoundaryCondition.PERFECTLY_CONDUCTING
IP = BoundaryCondition.INFINITELY_PERMEABLE

ALL_PAIRS = {
    "pc-pc": BoundaryPair(PC, PC),
    "ip-ip": BoundaryPair(IP, IP),
    "pc-ip": BoundaryPair(PC, IP),
    "ip-pc": BoundaryPair(IP, PC),
}


@pytest.fixture(params=list(ALL_PAIRS), ids=list(ALL_PAIRS))
def bc_pair(request):
    return ALL_PAIRS[request.param]
