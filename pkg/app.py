import sys

from cli import run_cli


def main(argv: list[str] | None = None) -> int:
    """Command-line entry point.

    Usage:
        python app.py verify group.json
        python app.py embed group.json points.csv --n 2 --p 6 --seed 7 --out emb.csv
    """
    return run_cli(sys.argv[1:] if argv is None else list(argv))


if __name__ == "__main__":
    raise SystemExit(main())
