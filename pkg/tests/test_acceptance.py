"""End-to-end acceptance checks; each test prints one PASS/FAIL line."""

import itertools
import operator
import random
import time

from click.testing import CliRunner

from conftest import DATA, VERDICTS
from ulogic import cli
from ulogic import duds as D
from ulogic import po2dfa as pd
from ulogic import tlfp as L
from ulogic import tlrec as R
from ulogic import tlxy as T
from ulogic import uitlpm as U
from ulogic.difftest import example1_member, gen_formula, gen_po2dfa, gen_ranker, gen_recursive_ranker
from ulogic.sexpr import Alphabet, enumerate_words

AL2, AL3, AL4 = Alphabet("ab"), Alphabet("abc"), Alphabet("abcd")
CMP = {"<": operator.lt, "<=": operator.le, ">": operator.gt, ">=": operator.ge}


def verdict(n, ok, detail=""):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
    print(line)
    VERDICTS.append(line)
    assert ok, line


def nonempty(al, n):
    return [w for w in enumerate_words(al, n) if w]


def test_criterion_1_example_agreement():
    t0 = time.perf_counter()
    words = list(enumerate_words(AL4, 6))
    m = pd.load_po2dfa((DATA / "fig2.sexp").read_text())
    _, ex2 = T.load((DATA / "example2.sexp").read_text())
    _, ex5 = D.load((DATA / "example5.sexp").read_text())
    _, ex6 = U.load((DATA / "example6.sexp").read_text())
    oracle = [example1_member(w) for w in words]
    got = {
        "fig2": pd.member_many(m, words),
        "example2": [T.member(ex2, w) for w in words],
        "example5": [D.member(ex5, w) for w in words],
        "example6": [U.member(ex6, w) for w in words],
    }
    elapsed = time.perf_counter() - t0
    bad = {k: sum(a != b for a, b in zip(v, oracle)) for k, v in got.items()}
    ok = len(words) == 5461 and not any(bad.values()) and elapsed < 10
    verdict(1, ok, f"{len(words)} words, mismatches {bad}, {elapsed:.2f}s")


def test_criterion_2_tlxy_compilation():
    words = list(enumerate_words(AL3, 5))
    bad = 0
    C = 0.0
    for seed in range(300):
        f = gen_formula("tlxy", 10, AL3, seed)
        m = T.to_po2dfa(f, AL3)
        assert not pd.validate(m)
        C = max(C, len(m) / T.size(f) ** 2)
        got = pd.member_many(m, words)
        bad += sum(g != T.member(f, w) for g, w in zip(got, words))
    verdict(2, bad == 0 and len(words) == 364, f"mismatches {bad}; states <= C*n^2 with C = {C:.2f}")


def test_criterion_3_translation_chain():
    words = nonempty(AL3, 6)
    bad = 0
    for seed in range(100):
        m = gen_po2dfa(3 + seed % 4, AL3, seed)
        u = D.to_uitlpm(D.from_po2dfa(m), AL3)
        m2 = T.to_po2dfa(U.to_tlxy(u, AL3), AL3)
        if pd.member_many(m, words) != pd.member_many(m2, words):
            bad += 1
    verdict(3, bad == 0, f"{bad}/100 automata changed language on non-empty words <= 6")


def _random_words(rng, al, k, max_len):
    return ["".join(rng.choice(al.letters) for _ in range(rng.randint(1, max_len))) for _ in range(k)]


def test_criterion_4_directionality():
    rng = random.Random(4)
    bad = checked = 0
    for seed in range(500):
        r = gen_ranker(6, AL3, seed)
        forms = {rel: T.directionality(r, rel, AL3) for rel in CMP}
        for w in _random_words(rng, AL3, 8, 10):
            p = T.lpos(r, w)
            if p is None:
                continue
            for rel, f in forms.items():
                mask = T.sat_mask(f, w)
                for i in range(1, len(w) + 1):
                    checked += 1
                    bad += bool(mask >> (i - 1) & 1) != CMP[rel](i, p)
    verdict(4, bad == 0 and checked > 0, f"{checked} position checks, {bad} mismatches")


def test_criterion_5_convexity():
    rng = random.Random(5)
    bad = 0
    for seed in range(500):
        r = gen_ranker(6, AL3, seed)
        forms = [T.directionality(r, rel, AL3) for rel in CMP]
        body = T.ranker_path(r)[1:]
        if body:
            forms.append(T.seq_compose_mods(body))
        for w in _random_words(rng, AL3, 8, 10):
            bad += sum(not R.is_convex(T.sat_mask(f, w)) for f in forms)
    for seed in range(300):
        r = gen_recursive_ranker(10, AL3, seed)
        for w in _random_words(rng, AL3, 8, 10):
            bad += not R.is_convex(R.sat_mask(r, w))
    verdict(5, bad == 0, f"{bad} non-convex satisfaction sets")


def _check_tlfp(phi, words, bad):
    groups: dict = {}
    for w in words:
        groups.setdefault(L.extract_params(phi, w), []).append(w)
    ms, order, hosts = L._structure(phi)
    for p, ws in groups.items():
        # (a) the validity formula picks out exactly the words with these parameters
        f = T.mk_and(L.dvalid(phi, p, AL2), L.tvalid(phi, p, AL2))
        members = set(ws)
        bad["a"] += sum(T.member(f, w) != (w in members) for w in words)
        # (b) rankers land on the defining positions
        Dm = L.rankers(phi, p)
        for m in p.delta:
            for w in ws:
                bad["b"] += Dm[m] is L.NEVER or T.lpos(Dm[m], w) != L.dpos(m, w)
        # (c) region-wise letter sets describe the truth of each host body
        for h in hosts:
            body = h.f if isinstance(h, L.MODAL) else h
            ds = dict(L.def_set(body, p, h))
            for w in ws:
                placed = {z: L.dpos(z, w) for z in L.immediate(h) if z in p.delta}
                regs = L.region_index(placed, w)
                mask = L.sat_mask(body, w)
                for i, c in enumerate(w):
                    bad["c"] += bool(mask >> i & 1) != (c in ds.get(regs[i], frozenset()))
    tr = L.trans_full(phi, AL2)
    bad["d"] += sum(T.member(tr, w) != L.member(phi, w) for w in words)


def test_criterion_6_tlfp_machinery():
    t0 = time.perf_counter()
    words = nonempty(AL2, 6)
    bad = {"a": 0, "b": 0, "c": 0, "d": 0}
    n = 0
    for seed in range(150):
        phi = gen_formula("tlfp", 10, AL2, seed, max_modals=3)
        assert len(L.modals(phi)) <= 3
        _check_tlfp(phi, words, bad)
        n += 1
    elapsed = time.perf_counter() - t0
    ok = not any(bad.values()) and elapsed < 120
    verdict(6, ok, f"{n} formulas, mismatches {bad}, {elapsed:.1f}s")


def test_criterion_7_recursive_rankers():
    _, phi = R.load((DATA / "tlrec_example.sexp").read_text())
    w = "ccaccbccabbcacc"
    example_ok = R.member(phi, w) and L.member(R.to_tlfp(phi, AL3), w)
    words = nonempty(AL3, 6)
    pointwise = 0
    for seed in range(300):
        f = gen_formula("tlrec", 10, AL3, seed, max_rlevel=2)
        assert R.rlevel(f) <= 2
        g = R.to_tlfp(f, AL3)
        pointwise += sum(R.sat_mask(f, x) != L.sat_mask(g, x) for x in words)
    grew = 0
    for seed in range(300):
        f = gen_formula("tlfp", 10, AL3, seed, max_modals=10)
        grew += R.size(R.from_tlfp(f)) > L.size(f)
    ok = example_ok and pointwise == 0 and grew == 0
    verdict(7, ok, f"example accepted={example_ok}, pointwise mismatches {pointwise}, size increases {grew}")


def test_criterion_8_small_model_emptiness():
    findings = []
    for seed in range(200):
        m = gen_po2dfa(3 + seed % 3, AL2, seed)
        small = pd.emptiness(m, len(m), method="enumerate")
        large = pd.emptiness(m, 2 * len(m), method="enumerate")
        # same verdict and, when non-empty, the same canonical witness
        if isinstance(small, pd.EmptyUpTo) != isinstance(large, pd.EmptyUpTo) or (
            isinstance(small, pd.NonEmpty) and small != large
        ):
            findings.append((seed, small, large))
    verdict(8, not findings, f"{len(findings)} automata with a witness only beyond #states")


def test_criterion_9_boolean_blowup():
    c = 2
    words = list(enumerate_words(AL2, 6))
    over = wrong = 0
    for seed in range(300):
        m1 = gen_po2dfa(3 + seed % 5, AL2, seed)
        m2 = gen_po2dfa(3 + seed % 4, AL2, seed + 10_000)
        r1, r2 = pd.member_many(m1, words), pd.member_many(m2, words)
        neg = pd.negate(m1)
        over += len(neg) > len(m1) + c
        wrong += pd.member_many(neg, words) != [not a for a in r1]
        for op, fn in ((pd.conjoin, operator.and_), (pd.disjoin, operator.or_)):
            mm = op(m1, m2)
            over += len(mm) > len(m1) + len(m2) + c
            wrong += pd.member_many(mm, words) != [fn(a, b) for a, b in zip(r1, r2)]
    verdict(9, over == 0 and wrong == 0, f"c = {c}: {over} size violations, {wrong} wrong languages")


def test_criterion_10_cli_contract(tmp_path):
    run = CliRunner().invoke
    problems = []
    files = {
        "po2dfa": "fig2.sexp",
        "tlxy": "example2.sexp",
        "duds": "example5.sexp",
        "uitlpm": "example6.sexp",
        "tlfp": "tlfp_example.sexp",
        "tlrec": "tlrec_example.sexp",
        "ete": "ete_example.sexp",
    }
    for name in files.values():
        res = run(cli.main, ["parse", str(DATA / name)])
        if res.exit_code != 0:
            problems.append(f"parse {name}")
        again = tmp_path / f"re_{name}"
        again.write_text(res.output)
        if run(cli.main, ["parse", str(again)]).output != res.output:
            problems.append(f"round trip {name}")
    for src, dst, _ in cli.ARROWS:
        out = tmp_path / f"{src}_{dst}.sexp"
        res = run(cli.main, ["translate", src, dst, str(DATA / files[src])])
        out.write_text(res.output)
        if res.exit_code != 0 or run(cli.main, ["parse", str(out)]).exit_code != 0:
            problems.append(f"translate {src}->{dst}")
            continue
        eq = run(cli.main, ["equiv", "--bound", "5", str(DATA / files[src]), str(out)])
        if eq.exit_code != 0:
            problems.append(f"equiv after {src}->{dst}: {eq.output.strip()}")
    compiled = tmp_path / "tlxy_po2dfa.sexp"
    for name in ("example2.sexp", "example5.sexp", "example6.sexp", "tlxy_po2dfa.sexp"):
        path = compiled if name == "tlxy_po2dfa.sexp" else DATA / name
        res = run(cli.main, ["equiv", "--bound", "6", str(DATA / "fig2.sexp"), str(path)])
        if (res.exit_code, res.output.strip()) != (0, "EQUIVALENT (5461 words)"):
            problems.append(f"equiv fig2 {name}: {res.output.strip()}")
    expect = [
        (["member", "po2dfa", "acdb", str(DATA / "fig2.sexp")], 0),
        (["member", "tlxy", "ada", str(DATA / "example2.sexp")], 1),
        (["member", "tlxy", "aä", str(DATA / "example2.sexp")], 2),
        (["sat", str(DATA / "example2.sexp")], 0),
        (["sat", str(DATA / "contradiction.sexp")], 1),
        (["empty", str(DATA / "contradiction.sexp")], 0),
        (["empty", str(DATA / "fig2.sexp")], 1),
        (["equiv", "--bound", "3", str(DATA / "fig2.sexp"), str(DATA / "contradiction.sexp")], 2),
        (["translate", "po2dfa", "tlfp", str(DATA / "fig2.sexp")], 2),
        (["sat", str(DATA / "tlrec_example.sexp")], 3),
        (["bogus"], 2),
    ]
    for args, code in expect:
        res = run(cli.main, args)
        if res.exit_code != code:
            problems.append(f"{' '.join(args[:2])}: exit {res.exit_code} != {code}")
    if run(cli.main, ["sat", str(DATA / "example2.sexp")]).output.strip() != "SAT witness=ad":
        problems.append("sat example2 witness")
    verdict(10, not problems, "; ".join(problems) or "all commands and exit codes as documented")
