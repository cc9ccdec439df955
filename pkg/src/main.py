# src/main.py
import os
import sys

# --- Setup ---
# Добавляем корень проекта в системный путь
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.join(current_dir, '..')
sys.path.insert(0, project_root)

from src.core.config import check_initial_config  # noqa: E402
from src.core.logging_setup import setup_logging  # noqa: E402
from src.cli.commands import cli  # noqa: E402


def main():
    setup_logging()
    check_initial_config()
    cli(prog_name="basicpairs")


if __name__ == "__main__":
    main()
