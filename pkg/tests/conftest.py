import pytest

from partialgroups import build_partial_group, group_by_spec, subgroup


@pytest.fixture(scope="session")
def z6():
    return group_by_spec("Z6")


@pytest.fixture(scope="session")
def s3():
    return group_by_spec("S3")


@pytest.fixture(scope="session")
def z6_instance(z6):
    # carrier {0,2,3,5}: 5 factors as 3*2
    return build_partial_group(z6, [0, 3], [0, 2])


@pytest.fixture(scope="session")
def s3_instance(s3):
    # support = even permutations {e,(012),(021)}, defect = {e,(12)}
    return build_partial_group(s3, subgroup(s3, [0, 3, 4]), [0, 1])


@pytest.fixture(scope="session")
def s3_melted(s3):
    # a plain group viewed as a partial group with trivial defect
    return build_partial_group(s3, subgroup(s3, range(6)), [0])


@pytest.fixture(scope="session")
def trivial_instance():
    z2 = group_by_spec("Z2")
    return build_partial_group(z2, [0], [0])
