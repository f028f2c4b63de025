import os
from pathlib import Path

from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent.parent
ENV_PATH = BASE_DIR / ".env"
FIXTURES_DIR = BASE_DIR / "app" / "fixtures"
load_dotenv(dotenv_path=ENV_PATH)


def _as_bool(value: str | None, default: bool = False) -> bool:
	if value is None:
		return default
	return value.strip().lower() in {"1", "true", "yes", "on"}


def _as_path(value: str | None, default: Path) -> Path:
	if not value or not value.strip():
		return default
	path = Path(value.strip()).expanduser()
	return path if path.is_absolute() else BASE_DIR / path


class Settings:
	OUTPUT_DIR: Path = _as_path(os.getenv("XMIN_OUTPUT_DIR"), BASE_DIR / "reports")
	LOG_JSON: bool = _as_bool(os.getenv("LOG_JSON"), default=False)

	# sampling defaults; not environment driven so that reports stay reproducible
	DEFAULT_SEED: int = 0
	DEFAULT_SAMPLES: int = 100
	COMPOSITION_SAMPLES: int = 1000
	ORACLE_SAMPLES: int = 1000
	DEFAULT_OPS: tuple[int, int] = (10, 1)

	FIXTURES_DIR: Path = FIXTURES_DIR
	KNOWN_DISCREPANCIES_FILE: Path = FIXTURES_DIR / "known_discrepancies.txt"


settings = Settings()
