"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""
import contextlib
import json
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from planar_rips.campaigns import random_cloud, run_campaign
from planar_rips.classify import (CONSISTENT, decompose_iterated_chain, detect_cross_polytope,
                                  verify_theorem_A, verify_theorem_B, verify_theorem_C, wedge_summary)
from planar_rips.cli import EXIT_FOUND, EXIT_OK, main
from planar_rips.complex import FlagComplex, Graph
from planar_rips.constructions import chain_cloud, octahedron_chain_graph, two_hexagons_sharing_point
from planar_rips.homology import (Field, betti_numbers, chain_complex, euler_characteristic,
                                  is_minimal_n_cycle)
from planar_rips.io import cloud_to_csv, dumps, graph_to_json
from planar_rips.obstructions import catalog, rp2_complex, rp2_graph
from planar_rips.realizer import RealizationProblem, certify, loss_and_grad, realize
from planar_rips.rips import (PointCloud, build_rips, build_udg, count_octahedra,
                              gen_cross_polytope_points, intersecting_edge_pairs)


@contextlib.contextmanager
def criterion(number: str, title: str, limit: float | None = None):
    start = time.perf_counter()
    notes: list[str] = []
    try:
        yield notes
    except pytest.xfail.Exception as exc:
        ACCEPTANCE_LINES.append(f"criterion {number}: FAIL  {title}  ({exc})")
        print(ACCEPTANCE_LINES[-1])
        raise
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"criterion {number}: FAIL  {title}  ({type(exc).__name__}: {exc})"[:300])
        print(ACCEPTANCE_LINES[-1])
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ACCEPTANCE_LINES.append(f"criterion {number}: FAIL  {title}  ({elapsed:.2f}s >= {limit}s)")
        print(ACCEPTANCE_LINES[-1])
        pytest.fail(f"took {elapsed:.2f}s, limit {limit}s")
    extra = "; ".join(notes)
    ACCEPTANCE_LINES.append(f"criterion {number}: PASS  {title}  ({elapsed:.2f}s{'; ' + extra if extra else ''})")
    print(ACCEPTANCE_LINES[-1])


def test_criterion_01_octahedron_pipeline():
    with criterion("1", "octahedron pipeline", limit=1.0):
        cloud = gen_cross_polytope_points(2)
        k = build_rips(cloud)
        assert (k.n_vertices, k.graph.num_edges, len(k.facets)) == (6, 12, 8)
        assert detect_cross_polytope(k) == 2
        assert betti_numbers(k, Field.GF2).b == (1, 0, 1)
        assert betti_numbers(k, Field.Q).b == (1, 0, 1)
        assert count_octahedra(k)[0] == 1
        assert len(intersecting_edge_pairs(cloud, k)) == 6


def test_criterion_02_cross_polytope_family():
    with criterion("2", "cross-polytope family n=2..5", limit=5.0) as notes:
        for n in range(2, 6):
            cloud = gen_cross_polytope_points(n)
            k = build_rips(cloud)
            assert len(cloud) == 2 * n + 2
            assert verify_theorem_A(cloud, complex_=k).status == CONSISTENT
            assert len(k.facets) == 2 ** (n + 1)
            assert detect_cross_polytope(k) == n
        notes.append("facets 8/16/32/64")


def test_criterion_03_chain_reconstruction():
    with criterion("3a", "linear chains k=1..3 give (m,p)=(k,0), b2=k, b1=0", limit=10.0):
        for k in (1, 2, 3):
            v = verify_theorem_B(chain_cloud(k))
            assert v.status == CONSISTENT
            assert (v.details["wedge"]["m"], v.details["wedge"]["p"]) == (k, 0)
            b = v.details["betti_gf2"]
            assert b[2] == k and b[1] == 0


def test_criterion_03_four_cycle():
    title = "4-cycle arrangement gives (m,p)=(4,1), b2=4, b1=1"
    with criterion("3b", title, limit=10.0) as notes:
        g = octahedron_chain_graph(4, cyclic=True)
        k = FlagComplex(g)
        w = wedge_summary(decompose_iterated_chain(k))
        b = betti_numbers(k, Field.GF2)
        # the combinatorial ring is right; what is missing is a planar cloud for it
        assert (w.m, w.p) == (4, 1) and b[2] == 4 and b[1] == 1
        out = realize(RealizationProblem(g, restarts=20, iterations=600, seed=0))
        if not out.certified:
            notes.append(f"realizer best loss {out.best_loss:.2e}")
            pytest.xfail("no planar cloud realizing a 4-cycle of octahedra is known; "
                         f"combinatorial ring checks pass, realizer inconclusive (best loss {out.best_loss:.2e})")
        v = verify_theorem_B(PointCloud(tuple(out.points)))
        assert v.status == CONSISTENT and (v.details["wedge"]["m"], v.details["wedge"]["p"]) == (4, 1)


def test_criterion_04_theorem_C_census():
    with criterion("4", "census = b2 = crossings/6 on a 500-cloud campaign plus chains", limit=60.0) as notes:
        rep = run_campaign("theoremC", 7, 500)
        assert rep["ok"] and rep["verdicts"]["theoremC"]["counterexample"] == 0
        assert rep["verdicts"]["theoremC"]["non_vacuous"] >= 1
        extra = 0
        for cloud in (chain_cloud(1), chain_cloud(2), chain_cloud(3), two_hexagons_sharing_point()):
            v = verify_theorem_C(cloud)
            assert v.status == CONSISTENT, v.details
            extra += 1
        notes.append(f"{rep['verdicts']['theoremC']['non_vacuous']} non-vacuous campaign complexes + {extra} constructions")


def test_criterion_05_lemma_campaign():
    with criterion("5", "lemma property campaign, 1000 clouds", limit=120.0) as notes:
        rep = run_campaign("lemmas", 0, 1000)
        assert rep["ok"], rep["failures"][:3]
        assert set(rep["lemma_violations"]) >= {"cone", "no_k16", "hull_in_link", "link_components",
                                                 "nondegenerate_facets"}
        assert not any(rep["lemma_violations"].values())
        notes.append("zero violations")


def test_criterion_06_homology_oracle():
    with criterion("6", "homology oracle"):
        rp2 = rp2_complex()
        assert rp2.n_vertices == 11
        assert betti_numbers(rp2, Field.GF2).b == (1, 1, 1)
        assert betti_numbers(rp2, Field.Q).b == (1, 0, 0)
        octa = build_rips(gen_cross_polytope_points(2))
        for f in Field:
            assert betti_numbers(octa, f).b == (1, 0, 1)
        complexes = [rp2, octa, build_rips(chain_cloud(2)), build_rips(chain_cloud(3)),
                     FlagComplex(octahedron_chain_graph(4, cyclic=True)),
                     build_rips(gen_cross_polytope_points(3)), FlagComplex(Graph.complete(5))]
        for k in complexes:
            for f in Field:
                assert chain_complex(k, f).composed_is_zero()
                assert betti_numbers(k, f).euler() == euler_characteristic(k)


def _obstruct(path: str, capsys) -> tuple[int, dict]:
    code = main(["obstruct", path])
    return code, json.loads(capsys.readouterr().out)


def test_criterion_07_obstruction_detection(tmp_path, capsys):
    with criterion("7", "obstruction detection", limit=30.0) as notes:
        rp2 = tmp_path / "rp2.json"
        rp2.write_text(dumps(graph_to_json(rp2_graph())))
        code, out = _obstruct(str(rp2), capsys)
        finding = out["finding"]
        assert code == EXIT_FOUND and finding["id"] == "rp2-7"
        pattern = {e.id: e.graph for e in catalog()}["rp2-7"]
        emb = finding["embedding"]
        host = rp2_graph()
        assert len(set(emb)) == pattern.n
        assert all(host.has_edge(emb[u], emb[v]) == pattern.has_edge(u, v)
                   for u in range(pattern.n) for v in range(u + 1, pattern.n))
        k222 = tmp_path / "k222.json"
        k222.write_text(dumps(graph_to_json(build_udg(gen_cross_polytope_points(2)))))
        code, out = _obstruct(str(k222), capsys)
        assert code == EXIT_OK and out["finding"] is None
        for n in range(2, 6):
            p = tmp_path / f"cross{n}.csv"
            p.write_text(cloud_to_csv(gen_cross_polytope_points(n)))
            code, out = _obstruct(str(p), capsys)
            assert code == EXIT_OK and out["finding"] is None
        rng = np.random.default_rng(2024)
        for i in range(200):
            p = tmp_path / f"r{i}.csv"
            p.write_text(cloud_to_csv(random_cloud(rng)))
            code, out = _obstruct(str(p), capsys)
            assert code == EXIT_OK and out["finding"] is None
        notes.append("rp2-7 found; 205 realizable inputs clean")


def test_criterion_08_minimality_audit():
    with criterion("8", "minimality audit, entries with <= 9 vertices", limit=600.0) as notes:
        audited = 0
        for entry in catalog():
            g = entry.graph
            if g.n > 9:
                continue
            for v in range(g.n):
                h = g.induced([u for u in range(g.n) if u != v])
                out = realize(RealizationProblem(h))
                assert out.certified, f"{entry.id} minus vertex {v}: best loss {out.best_loss}"
                assert certify(out.points, h, out_eps := RealizationProblem(h).eps) and out_eps > 0
                audited += 1
            full = realize(RealizationProblem(g))
            assert not full.certified, f"{entry.id} itself was certified"
        notes.append(f"{audited} deletions certified, no entry certified")


def test_criterion_09_gradient_check():
    with criterion("9", "realizer gradient vs central differences, rel 1e-6") as notes:
        rng = np.random.default_rng(99)
        worst = 0.0
        for _ in range(100):
            n = int(rng.integers(3, 10))
            g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
            x = rng.uniform(0, 2, size=(n, 2))
            _, grad = loss_and_grad(x, g, 0.015)
            num = np.zeros_like(x)
            h = 1e-6
            for i in range(n):
                for c in range(2):
                    xp, xm = x.copy(), x.copy()
                    xp[i, c] += h
                    xm[i, c] -= h
                    num[i, c] = (loss_and_grad(xp, g, 0.015)[0] - loss_and_grad(xm, g, 0.015)[0]) / (2 * h)
            worst = max(worst, np.linalg.norm(num - grad) / max(np.linalg.norm(grad), 1e-12))
        assert worst < 1e-6
        notes.append(f"worst relative error {worst:.1e}")


def test_criterion_10_minimal_cycle():
    with criterion("10", "minimal 2-cycle check", limit=5.0):
        assert is_minimal_n_cycle(build_rips(gen_cross_polytope_points(2)), 2)
        assert not is_minimal_n_cycle(build_rips(chain_cloud(2)), 2)
        assert not is_minimal_n_cycle(FlagComplex(Graph.complete(3)), 2)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
