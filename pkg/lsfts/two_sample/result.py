from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import List, Optional


class PValueMethod(str, Enum):
    CHISQ = 'chisq'
    MC_WEIGHTED = 'mc_weighted'


@dataclass(frozen=True)
class TwoSampleResult:
    """
    Outcome of the local two-sample mean tests at one rescaled time

    `p_value` belongs to the studentized projected statistic (chi-square with q_used
    degrees of freedom); the other statistics carry Monte Carlo weighted chi-square
    p-values when those were requested.
    """
    statistic_U: float
    statistic_Ubar: float
    statistic_Utilde: float
    q_used: int
    p_value: float
    theta_hat: float
    method: PValueMethod = PValueMethod.CHISQ
    p_value_ubar: Optional[float] = None
    p_value_u: Optional[float] = None
    eta: List[float] = field(default_factory=list)

    def __post_init__(self):
        for name in ('statistic_U', 'statistic_Ubar', 'statistic_Utilde'):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        for name in ('p_value', 'p_value_ubar', 'p_value_u'):
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if self.q_used < 1:
            raise ValueError(f"q_used must be at least 1, got {self.q_used}")

    def to_dict(self) -> dict:
        payload = asdict(self)
        payload['method'] = PValueMethod(self.method).value
        return payload
