"""Smoke test for the heckebounds extension module.

Build first, e.g. `maturin develop -m crates/py/Cargo.toml --features extension-module`,
or copy target/release/libheckebounds.so next to this script as heckebounds.so.
"""

import math
import os
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import heckebounds as hb


def main():
    table = {2: 1, 3: 0, 4: 2, 6: 5, 7: 0, 8: 14}
    for k, order in table.items():
        cert = hb.tensor_power_pole(k)
        assert cert.total_order == order, (k, cert)
    assert hb.tensor_power_pole(6, rep_type="tetrahedral").total_order == 6
    assert hb.tensor_power_pole(2, self_dual=False).total_order == 0
    print("k=8:", hb.tensor_power_pole(8).render())

    pos = hb.positive_side()
    assert abs(pos.constant - 0.9042) < 5e-4 and abs(pos.optimizer - 1.331) < 5e-4
    assert abs(hb.negative_side().constant - 2.5 ** (1 / 6)) < 1e-9
    assert abs(hb.positive_side_weak().constant - 1 / math.sqrt(2)) < 1e-9
    assert abs(hb.non_self_dual(math.pi / 4).constant - 0.5) < 1e-9

    assert hb.tensor_power(4).dim() == 16
    assert [m for _, m in hb.cg_pair(3, 3).terms()] == [1, 1, 1, 1]

    ec = hb.ec_ap_curve((0, -1, 1, -10, -20), 10_000)
    raw = dict(zip(ec.primes(), ec.raw()))
    assert (raw[5], raw[7], raw[13]) == (1, -2, 4)
    above = hb.density_profile(ec, 0.904)
    below = hb.density_profile(ec, 1.164, side="below")
    print(f"11a1 to X=10^4: above {above['natural_proportion']:.4f}, below {below['natural_proportion']:.4f}")
    assert hb.verify_theorem(ec, "t1pos")["passed"]
    assert hb.verify_theorem(ec, "t1neg")["passed"]

    tau = hb.tau_ap(100)
    assert tau.raw()[:3] == [-24, 252, 4830]

    st = hb.sato_tate_sample(20_000, seed=1)
    print(f"ST sample k=2 slope {hb.pole_order_probe(st, 2):.3f}, k=4 ratio {hb.normalized_ratio(st, 4):.3f}")

    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "st.csv")
        st.write_csv(path)
        back = hb.Dataset.read_csv(path)
        assert back.primes() == st.primes() and back.eigenvalues() == st.eigenvalues()

    try:
        hb.tensor_power_pole(6, rep_type="dihedral")
    except hb.HeckeError as e:
        assert "monomial" in str(e)
    else:
        raise AssertionError("dihedral should be rejected")
    print("ok")


if __name__ == "__main__":
    main()
