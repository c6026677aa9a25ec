"""Smoke test for the quarticz extension module.

Build and install first:
    pip install --no-build-isolation ./crates/quarticz-py
"""

import json
import math

import quarticz


def main() -> None:
    g = quarticz.g_coefficients(20)
    assert g[:18] == [0, 1, 0, 0, 0, -6, 0, 0, 0, 9, 0, 0, 0, 10, 0, 0, 0, -30], g
    assert quarticz.g_coefficients(60, "hecke") == quarticz.g_coefficients(60, "gauss") == quarticz.g_coefficients(60)
    assert [quarticz.a_p(p) for p in (3, 5, 7, 13)] == [0, -6, 0, 10]

    assert quarticz.count("fermat", 3) == 16
    assert quarticz.count("z", 5, "naive") == quarticz.count("z", 5)
    assert quarticz.count("ztilde", 7) == 8 * quarticz.count("fermat", 7)
    assert quarticz.orbit_sizes() == [15, 15, 180]

    tau = (2j, 0.5j, 2j)
    t = quarticz.theta("0000", tau)
    assert abs(t.imag) < 1e-12 and t.real > 1
    assert abs(quarticz.theta("1010", tau)) < 1e-12
    assert abs(quarticz.fz(tau)) > 0

    # E_Z at the boundary tends to g(tau1/4) in its first component.
    tau1 = 0.13 + 0.7j
    h = quarticz.ez((tau1, 0j, 12j))
    q = complex(0, 2 * math.pi) * tau1 / 4
    gq = sum(a * complex(math.e) ** (n * q) for n, a in enumerate(quarticz.g_coefficients(200)))
    assert abs(h[0] - gq) < 1e-9, (h, gq)
    assert abs(h[1]) < 1e-9 and abs(h[2]) < 1e-9

    report = json.loads(quarticz.check("fermat"))
    assert report["passed"] and report["trace_at_3"] == 0
    try:
        quarticz.a_p(4)
    except ValueError:
        pass
    else:
        raise AssertionError("a_p(4) should raise")
    print("quarticz", quarticz.__version__, "smoke test passed")


if __name__ == "__main__":
    main()
