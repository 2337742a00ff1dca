import pytest

from verlinde.core import GroupId
from verlinde.prym import moduli_dimension, prym_sum, theta_dim


def test_theta_examples():
    assert theta_dim(2, 3, "even") == 5
    assert theta_dim(2, 8, "even") == 34
    for g in range(1, 6):
        assert theta_dim(g, 1, "odd") == 0


@pytest.mark.parametrize("m", range(1, 13))
@pytest.mark.parametrize("g", range(1, 9))
def test_theta_parity_laws(g, m):
    even, odd = theta_dim(g, m, "even"), theta_dim(g, m, "odd")
    assert even + odd == m**g == theta_dim(g, m)
    assert even - odd == (2**g if m % 2 == 0 else 1)


def test_prym_examples():
    assert prym_sum(2, 3, "even") == 35
    assert prym_sum(2, 3, "odd") == 19
    assert prym_sum(2, 5, "even") == 58
    assert prym_sum(2, 8, "total") == 184


@pytest.mark.parametrize("m", range(1, 10))
@pytest.mark.parametrize("g", range(2, 7))
def test_prym_total(g, m):
    assert prym_sum(g, m, "even") + prym_sum(g, m, "odd") == m**g + (2 ** (2 * g) - 1) * m ** (g - 1)


def test_errors():
    with pytest.raises(ValueError):
        theta_dim(0, 3)
    with pytest.raises(ValueError):
        theta_dim(2, 0)
    with pytest.raises(ValueError):
        theta_dim(2, 3, "both")
    with pytest.raises(ValueError):
        prym_sum(1, 3)
    with pytest.raises(ValueError):
        moduli_dimension(GroupId.sl(2), 1)


def test_moduli_dimension():
    assert moduli_dimension(GroupId.sl(2), 2) == 3
    assert moduli_dimension(GroupId.spin(7), 3) == 42
    assert moduli_dimension(GroupId.sl(4), 2) == 15
