"""Allow running with python -m sighom."""

from src.cli import run

if __name__ == "__main__":
    raise SystemExit(run())
