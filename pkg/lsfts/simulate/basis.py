import numpy as np

from lsfts.core import Grid


def fourier_basis(K: int, grid: Grid) -> np.ndarray:
    """
    First K Fourier functions on [0, 1], one per row

    phi_1 = 1, phi_{2m} = sqrt(2) cos(2 pi m s), phi_{2m+1} = sqrt(2) sin(2 pi m s);
    orthonormal in L2[0, 1].
    """
    s = grid.points
    rows = np.empty((K, grid.n))
    for k in range(1, K + 1):
        if k == 1:
            rows[0] = 1.0
        elif k % 2 == 0:
            rows[k - 1] = np.sqrt(2.0) * np.cos(2 * np.pi * (k // 2) * s)
        else:
            rows[k - 1] = np.sqrt(2.0) * np.sin(2 * np.pi * (k // 2) * s)
    return rows
