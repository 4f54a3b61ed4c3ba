"""End-to-end CLI runs in subprocesses: JSON payloads, files, exit codes."""

import json
import os
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "mcfans.cli"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("MCF_NODE_CAP", None)
    env.pop("MCF_SAMPLES", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CLI + list(args), capture_output=True,
                          text=True, env=env)


def run_json(*args, **kw):
    proc = run_cli(*args, **kw)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


# --- enumerate ---

def test_enumerate():
    data = run_json("enumerate", "--quiver", "a2", "--m", "3")
    assert data["count"] == 22 and data["edge_count"] == 33
    assert len(data["graph"]["nodes"]) == 22
    assert data["graph"]["initial"] in {n["key"] for n in data["graph"]["nodes"]}


def test_logs_go_to_stderr_only():
    proc = run_cli("enumerate", "--quiver", "a2", "--m", "1")
    json.loads(proc.stdout)                  # stdout is pure JSON
    assert "enumerated" in proc.stderr


# --- mgs ---

def test_mgs():
    data = run_json("mgs", "--quiver", "a2tilde", "--m", "1",
                    "--depth-cap", "10")
    assert data["count"] == 5 and data["truncated"] is True
    lengths = sorted(len(s["mutations"]) for s in data["sequences"])
    assert lengths == [3, 4, 4, 5, 5]


def test_mgs_longest():
    data = run_json("mgs", "--quiver", "a3", "--m", "3", "--longest")
    assert data["longest"] == 18


def test_mgs_needs_depth_cap():
    proc = run_cli("mgs", "--quiver", "a2")
    assert proc.returncode == 2


# --- fans ---

def test_fans_one_parity():
    data = run_json("fans", "--quiver", "a2", "--m", "3",
                    "--parity", "horizontal")
    assert "vertical" not in data
    comp = data["horizontal"]
    assert comp["count"] == 5
    assert [c["size"] for c in comp["components"]] == [5, 5, 4, 4, 4]
    algebra = comp["components"][0]["algebra"]
    assert algebra["parity"] == "horizontal"
    assert [f["slot"] for f in algebra["factors"]] == [0, 1]


def test_fans_both_parities():
    data = run_json("fans", "--quiver", "a2")
    assert data["horizontal"]["count"] >= 1
    assert data["vertical"]["count"] >= 1


# --- walls ---

def test_walls():
    data = run_json("walls", "--quiver", "a3")
    assert data["count"] == 6
    assert data["walls"][0] == {"normal": [0, 0, 1], "subdims": []}


# --- render ---

def test_render_stats():
    data = run_json("render", "--quiver", "a3", "--format", "stats")
    assert data["arc_group_count"] == 6 and data["black"] == 6


def test_render_svg(tmp_path):
    out = tmp_path / "walls.svg"
    proc = run_cli("render", "--quiver", "a3", "--out", str(out),
                   "--samples", "90")
    assert proc.returncode == 0
    flag_bytes = out.read_bytes()
    assert flag_bytes.startswith(b'<?xml')

    env_out = tmp_path / "env.svg"
    run_cli("render", "--quiver", "a3", "--out", str(env_out),
            env_extra={"MCF_SAMPLES": "90"})
    assert env_out.read_bytes() == flag_bytes  # env variable is honoured

    both_out = tmp_path / "both.svg"
    run_cli("render", "--quiver", "a3", "--out", str(both_out),
            "--samples", "90", env_extra={"MCF_SAMPLES": "180"})
    assert both_out.read_bytes() == flag_bytes  # flag beats env


def test_render_svg_needs_out():
    proc = run_cli("render", "--quiver", "a3")
    assert proc.returncode == 2


def test_render_pole(tmp_path):
    out = tmp_path / "pole.svg"
    proc = run_cli("render", "--quiver", "a3", "--out", str(out),
                   "--pole", "3/13,4/13,12/13", "--samples", "90")
    assert proc.returncode == 0 and out.exists()
    proc = run_cli("render", "--quiver", "a3", "--out", str(out),
                   "--pole", "1,2")
    assert proc.returncode == 2              # malformed pole


# --- dilog ---

def test_dilog():
    data = run_json("dilog", "--quiver", "a3", "--m", "1", "--truncate", "6")
    assert data["ok"] is True and data["mismatches"] == []
    assert data["count"] == 10
    assert data["series"]["truncation"] == 6
    assert data["series"]["terms"]


# --- verify ---

def test_verify():
    proc = run_cli("verify")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "11/11 checks passed" in proc.stdout
    assert proc.stdout.count("PASS") == 11


# --- exit codes and environment ---

def test_node_cap_failure_exits_one():
    proc = run_cli("enumerate", "--quiver", "a2tilde", "--node-cap", "5")
    assert proc.returncode == 1
    assert "NodeCapExceeded" in proc.stderr


def test_env_node_cap():
    proc = run_cli("enumerate", "--quiver", "a2", "--m", "3",
                   env_extra={"MCF_NODE_CAP": "5"})
    assert proc.returncode == 1
    proc = run_cli("enumerate", "--quiver", "a2", "--m", "3",
                   "--node-cap", "100", env_extra={"MCF_NODE_CAP": "5"})
    assert proc.returncode == 0              # explicit flag wins


def test_bad_env_value():
    proc = run_cli("enumerate", "--quiver", "a2",
                   env_extra={"MCF_NODE_CAP": "many"})
    assert proc.returncode == 2


def test_usage_errors():
    assert run_cli("polish", "--quiver", "a2").returncode == 2
    assert run_cli("enumerate").returncode == 2
    assert run_cli("enumerate", "--quiver", "d4").returncode == 2


def test_console_script_installed():
    import shutil
    exe = shutil.which("mcfans")
    if exe is None:
        pytest.skip("console script not on PATH in this environment")
    proc = subprocess.run([exe, "walls", "--quiver", "a2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 3
