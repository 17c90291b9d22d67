import csv
import io
import os
import pathlib
import subprocess

import numpy as np
import pytest

import eur

GOLDEN = pathlib.Path(__file__).resolve().parents[1] / "golden"

I2 = np.eye(2)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)


def bd(c1, c2, c3):
    return 0.25 * (np.eye(4) + c1 * np.kron(SX, SX) + c2 * np.kron(SY, SY) + c3 * np.kron(SZ, SZ))


def entropy(rho):
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-15]
    return float(-(w * np.log2(w)).sum())


def reduce(rho, keep):
    r = rho.reshape(2, 2, 2, 2)
    return np.einsum("ijkj->ik", r) if keep == "A" else np.einsum("ijil->jl", r)


def kraus_on_a(ops, rho):
    return sum(np.kron(k, I2) @ rho @ np.kron(k, I2).conj().T for k in ops)


def ad(d):
    return [np.diag([1.0, np.sqrt(1 - d)]), np.array([[0, np.sqrt(d)], [0, 0]])]


def bpf(p):
    return [np.sqrt(p) * I2, np.sqrt(1 - p) * SY]


def measured(rho, axis):
    _, vecs = np.linalg.eigh(axis)
    out = np.zeros_like(rho)
    for v in vecs.T:
        p = np.kron(np.outer(v, v.conj()), I2)
        out += p @ rho @ p
    return out


def oracle_bounds(rho):
    s_b = entropy(reduce(rho, "B"))
    s_ab = entropy(rho)
    u = sum(entropy(measured(rho, ax)) - s_b for ax in (SX, SZ))
    berta = 1 + s_ab - s_b
    mutual = entropy(reduce(rho, "A")) + s_b - s_ab
    holevo = 0.0
    for ax in (SX, SZ):
        _, vecs = np.linalg.eigh(ax)
        chi = s_b
        for v in vecs.T:
            p = np.kron(np.outer(v, v.conj()), I2)
            branch = reduce(p @ rho @ p, "B")
            w = np.trace(branch).real
            if w > 1e-12:
                chi -= w * entropy(branch / w)
        holevo += chi
    return u, berta, berta + max(0.0, mutual - holevo)


def load(name):
    with open(GOLDEN / f"{name}.csv", newline="") as f:
        return list(csv.DictReader(f))


@pytest.mark.parametrize("name,channel", [("fig1", ad), ("fig2", bpf)])
def test_golden_bounds_match_numpy_oracle(name, channel):
    for row in load(name)[::10]:
        rho = kraus_on_a(channel(float(row["param"])), bd(-0.5, 0.4, 0.8))
        u, berta, adabi = oracle_bounds(rho)
        assert abs(float(row["u"]) - u) < 1e-9
        assert abs(float(row["berta"]) - berta) < 1e-9
        assert abs(float(row["adabi"]) - adabi) < 1e-9


def test_bindings_match_numpy_oracle():
    rho_np = kraus_on_a(ad(0.37), bd(-0.5, 0.4, 0.8))
    rho = eur.evolve("AD", 0.37, eur.bell_diagonal_density(-0.5, 0.4, 0.8))
    assert np.abs(rho - rho_np).max() < 1e-14
    r = eur.bound_report(rho)
    u, berta, adabi = oracle_bounds(rho_np)
    assert abs(r.u_lhs - u) < 1e-10
    assert abs(r.berta - berta) < 1e-10
    assert abs(r.adabi - adabi) < 1e-10
    assert r.berta <= r.pati + 1e-9 <= r.adabi + 2e-9


def test_preset_text_equals_golden():
    assert eur.run_preset_csv("fig2", 1) == (GOLDEN / "fig2.csv").read_text()


def test_witness_thresholds():
    ad_r = eur.witness_threshold("AD")
    bpf_r = eur.witness_threshold("BPF")
    assert ad_r.parameter_name == "d" and abs(ad_r.critical_value - 0.4058) < 0.005
    assert bpf_r.parameter_name == "p" and abs(bpf_r.critical_value - 0.1125) < 0.005


def test_capacity_and_steering():
    rho = eur.bell_diagonal_density(1, 1, -1)
    assert abs(eur.channel_capacity(rho) - 2) < 1e-12
    assert abs(eur.channel_capacity(eur.evolve("BPF", 0.5, rho)) - 1) < 1e-12
    steered = eur.steer("filter", 0.5, rho)
    assert np.abs(steered - rho).max() < 1e-15


def test_errors_map_to_python_exceptions():
    with pytest.raises(Exception, match="unphysical"):
        eur.bell_diagonal_density(1, 1, 1)
    with pytest.raises(Exception):
        eur.evolve("AD", 1.5, eur.bell_diagonal_density(0, 0, 0))


def test_cli_writes_csv(tmp_path):
    cli = os.environ.get("EUR_CLI")
    if not cli:
        pytest.skip("EUR_CLI not set")
    out = tmp_path / "fig1.csv"
    subprocess.run([cli, "preset", "fig1", "--out", str(out)], check=True)
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 101
    assert rows[0]["channel"] == "AD"
