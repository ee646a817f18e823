"""End-to-end acceptance checks, one test per criterion.

Run ``python tests/test_acceptance.py`` for a plain PASS/FAIL listing; under
pytest the same lines appear in the terminal summary.
"""

import pytest

from skein.checks import ALL_CHECKS

RESULTS = []


@pytest.mark.parametrize("name", list(ALL_CHECKS))
def test_criterion(name):
    res = ALL_CHECKS[name]()
    RESULTS.append(res)
    print(res.line())
    assert res.passed, res.details


if __name__ == "__main__":
    import sys

    ok = True
    for name, fn in ALL_CHECKS.items():
        res = fn()
        ok = ok and res.passed
        print(res.line(), flush=True)
    sys.exit(0 if ok else 1)
