import numpy as np

from lsfts.exceptions import InvalidOrderError, UndefinedOrderError


def select_q_ratio(eigenvalues, q_bar: int, eps0: float = 1e-4) -> int:
    """
    Eigenvalue-ratio choice of the number of components

    Eigenvalues whose ratio to the leading one is below eps0 in absolute value are
    treated as zero; the order is the argmin over 1 <= j <= q_bar of eta_{j+1}/eta_j,
    with 0/0 read as 1 and ties going to the smallest j.

    Args:
        eigenvalues: Descending spectrum, longer than q_bar
        q_bar: Largest order considered
        eps0: Relative threshold below which eigenvalues count as zero

    Returns:
        int: The selected order, 1-based
    """
    values = np.asarray(eigenvalues, dtype=float)
    if q_bar < 1 or q_bar >= values.size:
        raise InvalidOrderError(f"q_bar must lie in [1, {values.size - 1}], got {q_bar}")
    if not eps0 > 0:
        raise InvalidOrderError(f"eps0 must be positive, got {eps0}")
    if not values[0] > 0:
        raise UndefinedOrderError("leading eigenvalue is not positive; the order is undefined")
    relative = values[:q_bar + 1] / values[0]
    relative = np.where(np.abs(relative) < eps0, 0.0, relative)
    relative = np.clip(relative, 0.0, None)
    numerators = relative[1:]
    denominators = relative[:-1]
    ratios = np.ones(q_bar)
    defined = denominators > 0
    ratios[defined] = numerators[defined] / denominators[defined]
    return int(np.argmin(ratios)) + 1
