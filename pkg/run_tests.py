#!/usr/bin/env python3
"""
Smoke test suite for the trigraded CLI

Runs each subcommand once on a small box and checks a known value.
The full test suite lives in tests/ (run with pytest).

Usage:
    python3 run_tests.py
"""

import io
import json
import sys
import tempfile
from contextlib import redirect_stdout
from pathlib import Path

# Color codes
GREEN = "\033[92m"
RED = "\033[91m"
YELLOW = "\033[93m"
BLUE = "\033[94m"
BOLD = "\033[1m"
RESET = "\033[0m"


def print_header(text: str) -> None:
    """Print a formatted header."""
    print(f"\n{BLUE}{BOLD}{'=' * 80}{RESET}")
    print(f"{BLUE}{BOLD}{text.center(80)}{RESET}")
    print(f"{BLUE}{BOLD}{'=' * 80}{RESET}\n")


def print_test(name: str) -> None:
    print(f"{BOLD}{name}{RESET}...", end=" ", flush=True)


def print_pass() -> None:
    print(f"{GREEN}✓ PASS{RESET}")


def print_fail(error: str = "") -> None:
    print(f"{RED}✗ FAIL{RESET}")
    if error:
        print(f"  {RED}Error: {error}{RESET}")


def cli(*argv: str) -> tuple:
    """Run the CLI in-process; returns (exit code, stdout)."""
    from trigraded.__main__ import main

    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(["--log-level", "WARNING", *argv])
    return code, buffer.getvalue()


def records(text: str) -> list:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# Test 1: Degrees
def test_degree() -> bool:
    print_test("Test 1: degree rho")
    try:
        code, out = cli("degree", "rho")
        assert code == 0, f"exit {code}"
        assert records(out)[0]["degree"] == [0, -1, -1], out
        print_pass()
        return True
    except Exception as e:
        print_fail(str(e))
        return False


# Test 2: Point rings
def test_point() -> bool:
    print_test("Test 2: point --ring uZ2")
    try:
        code, out = cli("point", "--ring", "uZ2", "--box", "-2:2,-2:2")
        assert code == 0, f"exit {code}"
        unit = [r for r in records(out) if r["degree"] == [0, 0]]
        assert unit[0]["summands"] == [["Z2", "1"]], unit
        print_pass()
        return True
    except Exception as e:
        print_fail(str(e))
        return False


# Test 3: Steenrod algebra
def test_steenrod() -> bool:
    print_test("Test 3: steenrod rank --degree 1,0,0")
    try:
        code, out = cli("steenrod", "rank", "--degree", "1,0,0")
        assert code == 0, f"exit {code}"
        assert records(out)[0]["rank"] == 2, out
        print_pass()
        return True
    except Exception as e:
        print_fail(str(e))
        return False


# Test 4: Ext
def test_ext() -> bool:
    print_test("Test 4: ext --degree 8 --check")
    try:
        code, out = cli("ext", "--s-max", "3", "--degree", "8", "--check", "--no-cache")
        assert code == 0, f"exit {code}"
        orders = {(r["s"], r["t"]): [s[0] for s in r["summands"]] for r in records(out)}
        assert orders[(0, 0)] == ["Z2"], orders
        assert orders[(1, 4)] == ["Z/2^2"], orders
        print_pass()
        return True
    except Exception as e:
        print_fail(str(e))
        return False


# Test 5: Cta and its vanishing region
def test_cta_regions(workdir: Path) -> bool:
    print_test("Test 5: cta | regions check --object 2")
    try:
        code, out = cli("cta", "--box", "0:4,-3:3,0:2", "--no-cache")
        assert code == 0, f"exit {code}"
        table = workdir / "cta.jsonl"
        table.write_text(out, encoding="utf-8")
        code, out = cli("regions", "check", "--object", "2", "--table", str(table))
        assert code == 0 and not out, out
        print_pass()
        return True
    except Exception as e:
        print_fail(str(e))
        return False


# Test 6: Bockstein spectral sequence
def test_bockstein() -> bool:
    print_test("Test 6: bockstein check --input kq")
    try:
        code, out = cli("bockstein", "check", "--input", "kq")
        assert code == 0, f"exit {code}"
        assert records(out)[0]["ok"] is True, out
        print_pass()
        return True
    except Exception as e:
        print_fail(str(e))
        return False


# Test 7: Charts
def test_chart(workdir: Path) -> bool:
    print_test("Test 7: chart of uF2")
    try:
        code, out = cli("point", "--ring", "uF2", "--box", "-4:3,-3:5")
        table = workdir / "uf2.jsonl"
        table.write_text(out, encoding="utf-8")
        svg = workdir / "uf2.svg"
        code, _ = cli("chart", "--table", str(table), "--edges", "a_sigma,u_sigma", "--ring", "uF2",
                      "--out", str(svg))
        assert code == 0, f"exit {code}"
        assert svg.read_text(encoding="utf-8").count('<g class="summand">') == len(records(out))
        print_pass()
        return True
    except Exception as e:
        print_fail(str(e))
        return False


def main() -> int:
    """Run all smoke tests."""
    print_header("TRIGRADED - CLI SMOKE TESTS")

    results = []
    with tempfile.TemporaryDirectory() as tmp:
        workdir = Path(tmp)
        results.append(test_degree())
        results.append(test_point())
        results.append(test_steenrod())
        results.append(test_ext())
        results.append(test_cta_regions(workdir))
        results.append(test_bockstein())
        results.append(test_chart(workdir))

    print_header("TEST SUMMARY")

    total = len(results)
    passed = sum(results)
    failed = total - passed

    print(f"Total Tests:  {total}")
    print(f"{GREEN}Passed:       {passed}{RESET}")
    if failed > 0:
        print(f"{RED}Failed:       {failed}{RESET}")
    else:
        print(f"Failed:       {failed}")

    print()

    if failed == 0:
        print(f"{GREEN}{BOLD}✅ ALL SMOKE TESTS PASSED!{RESET}")
        print(f"{BLUE}Next:{RESET} pytest tests/ (add --runslow for the acceptance boxes)")
        return 0
    print(f"{RED}{BOLD}❌ SOME TESTS FAILED{RESET}")
    print(f"\n{YELLOW}See HOW_TO_TEST.md for troubleshooting help.{RESET}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
