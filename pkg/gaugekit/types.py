import numpy as np
import numpy.typing as npt

Vector = npt.NDArray[np.float64]
"""
A point or direction of $\\mathbb{R}^d$, stored as a 1D float array of shape `(d,)`.

Example:
    ```python
    x: Vector = np.array([0.5, 0.5])
    ```
"""

PointArray = npt.NDArray[np.float64]
"""
A stack of points of $\\mathbb{R}^d$ with shape `(n, d)`.
Rows are points. Vertex lists of polytopes use this type.
"""

MatrixArray = npt.NDArray[np.float64]
"""
A dense 2D float matrix, e.g. the constraint matrix `A` of `A x <= b`.
"""

ArrayLikeVector = npt.ArrayLike
"""
Anything `numpy.asarray` turns into a `Vector` (lists, tuples, arrays).
Use this for functions' inputs and `Vector` for outputs.
"""
