#!/usr/bin/env python3
"""Run the acceptance criteria standalone, one pass/fail line each."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import test_acceptance  # noqa: E402


def main():
    failures = 0
    for idx, fn in enumerate(test_acceptance.CRITERIA, start=1):
        try:
            message = fn()
            print(f"criterion {idx}: PASS — {message}")
        except AssertionError as exc:
            failures += 1
            print(f"criterion {idx}: FAIL — {exc}")
    print(f"{len(test_acceptance.CRITERIA) - failures}/"
          f"{len(test_acceptance.CRITERIA)} criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
