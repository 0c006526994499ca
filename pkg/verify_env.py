#!/usr/bin/env python3
"""
Environment verification script

Checks the optional .env file, the TRIGRADED_* settings and the installed packages.
A missing .env is fine: every setting has a default.

Usage:
    python verify_env.py
"""

import os
import sys
from pathlib import Path

# Color codes for terminal output
GREEN = "\033[92m"
RED = "\033[91m"
YELLOW = "\033[93m"
BLUE = "\033[94m"
RESET = "\033[0m"

INTEGER_SETTINGS = {
    "TRIGRADED_EXT_SMAX": "Ext homological degree bound",
    "TRIGRADED_EXT_DEGREE": "Ext internal degree cap",
    "TRIGRADED_BOCKSTEIN_MAX_EXPONENT": "Bockstein monomial exponent cap",
    "TRIGRADED_CHART_CELL_SIZE": "Chart cell size (px)",
}
BOX_SETTINGS = {
    "TRIGRADED_POINT_BOX": ("Default point box", 2),
    "TRIGRADED_CTA_BOX": ("Default Cta box", 3),
}


def print_header(text: str) -> None:
    """Print a formatted header."""
    print(f"\n{BLUE}{'=' * 80}{RESET}")
    print(f"{BLUE}{text.center(80)}{RESET}")
    print(f"{BLUE}{'=' * 80}{RESET}\n")


def print_success(text: str) -> None:
    print(f"{GREEN}✓ {text}{RESET}")


def print_error(text: str) -> None:
    print(f"{RED}✗ {text}{RESET}")


def print_warning(text: str) -> None:
    print(f"{YELLOW}⚠ {text}{RESET}")


def print_info(text: str) -> None:
    print(f"{BLUE}ℹ {text}{RESET}")


def check_env_file() -> None:
    env_path = Path(".env")
    if env_path.exists():
        print_success(f".env file found at: {env_path.resolve()}")
    else:
        print_warning(".env file not found, using defaults")
        print_info("Run: cp .env.example .env")


def check_settings() -> bool:
    """Validate the TRIGRADED_* variables that are set."""
    try:
        from dotenv import load_dotenv
        load_dotenv()
    except ImportError:
        print_error("python-dotenv not installed!")
        return False

    ok = True
    print_header("CONFIGURATION")
    level = os.getenv("LOG_LEVEL", "INFO")
    if level.upper() in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        print_success(f"Log level: {level}")
    else:
        print_error(f"LOG_LEVEL={level!r} is not a logging level")
        ok = False

    cache_dir = os.getenv("TRIGRADED_CACHE_DIR")
    print_success(f"Cache directory: {cache_dir or 'data/ (default)'}")
    db_url = os.getenv("TRIGRADED_DATABASE_URL")
    if db_url:
        from sqlalchemy.engine import make_url
        print_success(f"Ext cache database: {make_url(db_url).render_as_string(hide_password=True)}")
    else:
        print_success("Ext cache database: SQLite file in the cache directory")

    for var, name in INTEGER_SETTINGS.items():
        value = os.getenv(var)
        if value is None:
            continue
        if value.lstrip("-").isdigit():
            print_success(f"{name}: {value}")
        else:
            print_error(f"{var}={value!r} is not an integer")
            ok = False

    for var, (name, dims) in BOX_SETTINGS.items():
        value = os.getenv(var)
        if value is None:
            continue
        try:
            from trigraded.data.tables import parse_box
            parse_box(value, dims)
            print_success(f"{name}: {value}")
        except Exception as e:
            print_error(f"{var}: {e}")
            ok = False
    return ok


def check_dependencies() -> bool:
    """Check if required Python packages are installed."""
    print_header("PYTHON DEPENDENCIES")

    required_packages = ["dotenv", "pydantic", "sqlalchemy", "numpy", "sympy", "pytest"]

    all_installed = True
    for package in required_packages:
        try:
            __import__(package)
            print_success(f"{package} installed")
        except ImportError:
            print_error(f"{package} not installed")
            all_installed = False

    if not all_installed:
        print_info("Run: pip install -r requirements.txt")

    return all_installed


def main():
    print_header("TRIGRADED - ENVIRONMENT VERIFICATION")

    check_env_file()
    deps_ok = check_dependencies()
    settings_ok = check_settings() if deps_ok else False

    print_header("VERIFICATION SUMMARY")

    if deps_ok:
        print_success("Python dependencies: OK")
    else:
        print_error("Python dependencies: INCOMPLETE")
    if settings_ok:
        print_success("Configuration: OK")
    else:
        print_error("Configuration: INVALID")

    print()

    if deps_ok and settings_ok:
        print_success("All checks passed.")
        print_info("Next steps:")
        print("  1. python run_tests.py")
        print("  2. pytest tests/")
        print("  3. python -m trigraded config")
        return 0
    print_info("See ENV_SETUP_GUIDE.md for detailed instructions.")
    return 1


if __name__ == "__main__":
    sys.exit(main())
