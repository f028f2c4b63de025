import os
from pathlib import Path

from app.core.config import settings


FIXTURE_FILES = (
    "linear_forms.txt",
    "tilde_forms.txt",
    "phi_terms.txt",
    "chart_forms.txt",
    "chart_identities.txt",
    "jacobian_123.txt",
    "tangent_basis_123.txt",
    "weight_table.txt",
    "fixed_points.txt",
    "bb_weights.txt",
    "torus_matrix.txt",
    "unipotent.txt",
    "unipotent_fixed.txt",
    "wonderful.txt",
    "poincare.txt",
    "known_discrepancies.txt",
)


def validate_output_dir(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise RuntimeError(f"Cannot create report directory {path}: {exc}") from exc

    if not os.access(path, os.W_OK):
        raise RuntimeError(
            f"Report directory {path} is not writable. Set XMIN_OUTPUT_DIR to a writable location"
        )
    return path


def validate_fixtures() -> None:
    missing = [
        name
        for name in FIXTURE_FILES
        if not (settings.FIXTURES_DIR / name).is_file()
    ]
    if missing:
        raise RuntimeError(f"Fixture files missing from {settings.FIXTURES_DIR}: {missing}")
