#!/usr/bin/env python3
"""Many-emitter routing: full spectra for chains of 5/10/20/30 emitters plus
the chain-length scaling report (routed maximum, transmission minima, loss
at the routing peak)."""

import argparse
import dataclasses
import json
from pathlib import Path

from photon_router import SystemConfig
from photon_router.cli import main as cli

SPECTRUM_LENGTHS = (5, 10, 20, 30)
SCALING_LENGTHS = "1,2,5,10,20,30"


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    base = SystemConfig(
        n_emitters=2, gamma=6.86, gamma_dr=11.03, gamma_ur=11.03,
        spacing=32.75, lambda_qd=655.0, lambda_sp=211.8, ddi_mode="auto",
    )
    for n in SPECTRUM_LENGTHS:
        config = dataclasses.replace(base, n_emitters=n)
        config_path = outdir / f"chain_{n:02d}.json"
        config_path.write_text(json.dumps(dataclasses.asdict(config), indent=2))
        code = cli([
            "spectrum", "--config", str(config_path),
            "--out", str(outdir / f"chain_{n:02d}.csv"),
            "--delta-min", "-300", "--delta-max", "300", "--delta-points", "2001",
        ])
        if code != 0:
            raise SystemExit(code)

    config_path = outdir / "chain_02.json"
    config_path.write_text(json.dumps(dataclasses.asdict(base), indent=2))
    code = cli([
        "scale-n", "--config", str(config_path),
        "--out", str(outdir / "scaling.json"),
        "--n-list", SCALING_LENGTHS,
        "--delta-min", "-300", "--delta-max", "300", "--delta-points", "2001",
    ])
    if code != 0:
        raise SystemExit(code)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("results/scaling"))
    run(parser.parse_args().outdir)
