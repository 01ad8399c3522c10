import os
from pathlib import Path
from shutil import rmtree
from tempfile import mkdtemp, mkstemp
from typing import Any, Optional

import numpy as np
from scipy.spatial.transform import Rotation

from .types import Matrix


class MockFile:
    """MockFile creates a temporary file for testing purposes.
    The file must be removed after usage by calling mock_file.cleanup().
    This action is automatically performed if MockFile is used in a with statement.

    >>> with MockFile(suffix=".yaml") as f:
    ...     _ = f.write_text("family: sphere")
    ...     f.read_text()
    'family: sphere'
    """

    path: Path

    def __init__(
        self, prefix: str = "thirdform-test", suffix: Optional[str] = None, directory: bool = False
    ) -> None:
        if directory:
            path = mkdtemp(prefix=prefix, suffix=suffix)
        else:
            handle, path = mkstemp(prefix=prefix, suffix=suffix)
            os.close(handle)
        self.path = Path(path)

    def __enter__(self) -> Path:
        return self.path

    def __exit__(self, *_: Any) -> bool:
        self.cleanup()
        return False

    def cleanup(self) -> None:
        if self.path.is_dir():
            rmtree(self.path)
        elif self.path.exists():
            self.path.unlink()


def random_rotation(rng: np.random.Generator) -> Matrix:
    """random_rotation draws a uniformly distributed proper rotation matrix.

    >>> r = random_rotation(np.random.default_rng(1))
    >>> bool(np.allclose(r @ r.T, np.eye(3))), round(float(np.linalg.det(r)), 9)
    (True, 1.0)
    """
    # Normalized isotropic quaternions are uniform over SO(3)
    return Rotation.from_quat(rng.normal(size=4)).as_matrix()
