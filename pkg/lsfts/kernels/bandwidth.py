from enum import Enum

from lsfts.exceptions import InvalidBandwidthError


class BandwidthMode(str, Enum):
    ESTIMATION = 'estimation'
    INFERENCE = 'inference'


# estimation: h ~ T^{-1/3} balances the covariance error bound;
# inference: undersmoothed so that T h^3 -> 0 along the default sequence
_EXPONENTS = {
    BandwidthMode.ESTIMATION: -1.0 / 3.0,
    BandwidthMode.INFERENCE: -0.4,
}


def default_bandwidth_h(T: int, mode: BandwidthMode = BandwidthMode.ESTIMATION, constant: float = 1.0) -> float:
    """
    Default smoothing bandwidth

    Args:
        T: Sample size, at least 2
        mode: 'estimation' for T^{-1/3}, 'inference' for T^{-0.4}
        constant: Multiplier in front of the power of T

    Returns:
        float: constant * T^exponent
    """
    if T < 2:
        raise InvalidBandwidthError(f"sample size must be at least 2, got {T}")
    if constant <= 0:
        raise InvalidBandwidthError(f"bandwidth constant must be positive, got {constant}")
    return constant * float(T) ** _EXPONENTS[BandwidthMode(mode)]


def default_bandwidth_b(T: int, h: float) -> float:
    """Default lag-window bandwidth (T h)^{1/3}; requires T h > 1."""
    effective = T * h
    if not effective > 1:
        raise InvalidBandwidthError(f"lag bandwidth needs T*h > 1, got T*h = {effective}")
    return effective ** (1.0 / 3.0)
