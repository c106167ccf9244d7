"""Regenerate the golden fixtures: ``python tests/fixtures/make_fixtures.py``.

Documents 00-39 are generated; 40-49 are hand-written and left alone.
Golden outputs are the CLI results on fixed document pairs and are frozen
once reviewed; regenerate only after an intentional format change.
"""

from pathlib import Path

import numpy as np

from softalg.axioms import GenConfig, gen_softset
from softalg.cli import run_command
from softalg.document import emit_softset_doc
from softalg.setrep import UniverseCtx

HERE = Path(__file__).parent
DOCS = HERE / "docs"
GOLDEN = HERE / "golden"

FIN = UniverseCtx.finite(["u1", "u2", "u3", "u4"], ["e1", "e2", "e3"])
CNT = UniverseCtx.countable(["e1", "e2", "e3"])

GOLDEN_RUNS = {
    "combine_00_01": ["combine", "00.json", "01.json"],
    "combine_20_21_22": ["combine", "20.json", "21.json", "22.json"],
    "sup_02_03": ["sup", "02.json", "03.json"],
    "sup_23_24": ["sup", "23.json", "24.json"],
    "project_04": ["project", "04.json", "--onto", "e1"],
    "leq_05_06": ["leq", "05.json", "06.json"],
    "finite_25": ["finite", "25.json"],
    "finite_26": ["finite", "26.json"],
    "decompose_27": ["decompose", "27.json", "--limit", "6"],
    "decompose_40_e1": ["decompose", "40.json", "--param", "e1", "--limit", "4"],
    "query_41_42": ["query", "41.json", "42.json", "--param", "e1"],
    "query_20_21": ["query", "20.json", "21.json", "--param", "e1"],
    "query_43_47": ["query", "43.json", "47.json", "--param", "e1"],
}


def main():
    for i in range(40):
        cfg = GenConfig(mode="finite" if i < 20 else "countable", atom_pool=12)
        ctx = FIN if i < 20 else CNT
        rng = np.random.default_rng([2024, i])
        phi = gen_softset(rng, cfg, ctx, domain_hint=None if i % 3 else ctx.param_space)
        (DOCS / f"{i:02d}.json").write_text(emit_softset_doc(phi), encoding="utf-8")
    for name, argv in GOLDEN_RUNS.items():
        args = [a if not a.endswith(".json") else str(DOCS / a) for a in argv]
        code, out, err = run_command(args)
        assert code == 0, (name, err)
        (GOLDEN / f"{name}.txt").write_text(out, encoding="utf-8")


if __name__ == "__main__":
    main()
