//! One PASS/FAIL line per acceptance criterion, with tolerances and time
//! limits pinned below. Run with `--nocapture` to see the lines.

use std::time::{Duration, Instant};

use braid_circuits::{encode_qubits, evaluate_circuit, evaluate_exact, reference, ConventionProfile, Evaluation, GateCircuit};
use fib_core::{cis, model_constants, AnyonCharge, Handedness, C64};
use fusion_basis::{braid_generator, enumerate_basis, representation, BraidWord, Factor, ReadingOrder, UnitaryMatrix};
use metrics_report::fixtures::{self, CompositeFixture};
use metrics_report::{calibrate_conventions, comparison_report, pinned_profile, score_gate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use su2_compile::{
    distance, gamma_conjugate, gamma_word, gates, leakage, merge, search, tau_matrix, vacuum_phase, word_error,
    Endpoint, Shard, WeaveSearchSpec,
};

const ALGEBRA_TOL: f64 = 1e-9;
const APPENDIX_TOL: f64 = 1e-10;
const STANDALONE_REL: f64 = 0.02;
const COMPOSITE_REL: f64 = 0.10;
const LEAKAGE_FACTOR: f64 = 2.0;
const EXACT_TOL: f64 = 1e-9;
const FALLBACK_CEILING: f64 = 5e-3;
const SEARCH_TOL: f64 = 1e-12;
const RANDOM_WORDS: usize = 200;
const SEED: u64 = 0x5eed_f1b0;

type Outcome = Result<String, String>;

struct Line {
    id: usize,
    name: &'static str,
    passed: bool,
    detail: String,
}

fn criterion(id: usize, name: &'static str, limit: Duration, f: impl FnOnce() -> Outcome) -> Line {
    let t = Instant::now();
    let out = f();
    let took = t.elapsed();
    let (mut passed, mut detail) = match out {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if took > limit {
        passed = false;
        detail.push_str("; over time limit");
    }
    detail.push_str(&format!("; {:.2}s of {}s", took.as_secs_f64(), limit.as_secs()));
    Line { id, name, passed, detail }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> BraidWord {
    let n = rng.gen_range(0..=max_len);
    let factors = (0..n)
        .map(|_| {
            let p = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            Factor::new(rng.gen_range(1..=2), p)
        })
        .collect();
    BraidWord::new(factors).unwrap()
}

fn det2(m: &UnitaryMatrix) -> C64 {
    m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
}

/// Count admissible fusion paths by trying every charge sequence.
fn brute_force_dimension(n: usize, sector: AnyonCharge) -> usize {
    if n == 1 {
        return usize::from(sector == AnyonCharge::Tau);
    }
    (0u32..1 << (n - 2))
        .filter(|mask| {
            // Charge after fusing k+2 anyons; bit set = τ. The first pair is free.
            let mut prev = true;
            for k in 0..n - 1 {
                let cur = if k == n - 2 { sector == AnyonCharge::Tau } else { mask >> k & 1 == 1 };
                if k > 0 && !prev && !cur {
                    return false;
                }
                prev = cur;
            }
            true
        })
        .count()
}

fn c1_dimensions() -> Outcome {
    for n in 1..=14 {
        for s in AnyonCharge::ALL {
            let got = enumerate_basis(n, s).map_err(|e| e.to_string())?.dim();
            let want = brute_force_dimension(n, s);
            ensure(got == want, || format!("n={n} {s:?}: {got} vs {want}"))?;
        }
    }
    let table = [(1, 0, 1), (2, 1, 1), (3, 1, 2), (4, 2, 3), (5, 3, 5), (6, 5, 8)];
    for (n, v, t) in table {
        ensure(
            enumerate_basis(n, AnyonCharge::Vacuum).unwrap().dim() == v
                && enumerate_basis(n, AnyonCharge::Tau).unwrap().dim() == t,
            || format!("small table at n={n}"),
        )?;
    }
    let d = enumerate_basis(12, AnyonCharge::Vacuum).unwrap().dim();
    ensure(d == 89, || format!("dim F_12^vac = {d}"))?;
    Ok("n ≤ 14 both sectors exact, dim F_12^vac = 89".into())
}

fn c2_algebra() -> Outcome {
    let mut worst: f64 = 0.0;
    for h in Handedness::ALL {
        for n in 3..=8 {
            for s in AnyonCharge::ALL {
                let b = enumerate_basis(n, s).unwrap();
                let g: Vec<UnitaryMatrix> = (1..n).map(|i| braid_generator(&b, i, h).unwrap()).collect();
                let id = UnitaryMatrix::identity(b.dim());
                for (i, gi) in g.iter().enumerate() {
                    worst = worst.max(gi.unitarity_defect()).max(gi.pow(10).max_abs_diff(&id));
                    if let Some(gj) = g.get(i + 1) {
                        worst = worst.max(gi.matmul(gj).matmul(gi).max_abs_diff(&gj.matmul(gi).matmul(gj)));
                    }
                    for gj in g.iter().skip(i + 2) {
                        worst = worst.max(gi.matmul(gj).max_abs_diff(&gj.matmul(gi)));
                    }
                }
            }
        }
        let b = enumerate_basis(4, AnyonCharge::Vacuum).unwrap();
        worst = worst.max(braid_generator(&b, 3, h).unwrap().max_abs_diff(&braid_generator(&b, 1, h).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 0..RANDOM_WORDS {
        let h = if k % 2 == 0 { Handedness::Right } else { Handedness::Left };
        let w = random_word(&mut rng, 24);
        let (s, wn) = (h.sign(), w.winding() as f64);
        let o = ReadingOrder::PrintedLeftLast;
        let vac = representation(3, AnyonCharge::Vacuum, h).unwrap().word_matrix(&w, o).unwrap();
        let r_tau = model_constants(h).r(AnyonCharge::Tau);
        worst = worst.max((vac.get(0, 0) - r_tau.powi(w.winding() as i32)).norm());
        let tau = representation(3, AnyonCharge::Tau, h).unwrap().word_matrix(&w, o).unwrap();
        let stripped = tau.scale(cis(-s * wn * std::f64::consts::PI / 10.0));
        worst = worst.max(stripped.unitarity_defect()).max((det2(&stripped) - 1.0).norm());
    }
    ensure(worst < ALGEBRA_TOL, || format!("worst residual {worst:.2e}"))?;
    Ok(format!("worst residual {worst:.2e} < {ALGEBRA_TOL:e}"))
}

fn c3_appendix() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let o = ReadingOrder::PrintedLeftLast;
    let xz = (&gates::pauli_x() + &gates::pauli_z()).scale(C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0));
    let hermitian = [gates::pauli_x(), gates::pauli_z(), xz];
    let mut worst: f64 = 0.0;
    for k in 0..RANDOM_WORDS {
        let h = if k % 2 == 0 { Handedness::Right } else { Handedness::Left };
        let w = random_word(&mut rng, 30);
        let g = tau_matrix(&gamma_word(), h, o).unwrap();
        let conj = gamma_conjugate(&w).unwrap();
        let lhs = tau_matrix(&conj, h, o).unwrap();
        let rhs = g.adjoint().matmul(&tau_matrix(&w, h, o).unwrap()).matmul(&g);
        worst = worst.max(lhs.max_abs_diff(&rhs));
        worst = worst.max((vacuum_phase(&w, h, o).unwrap() - vacuum_phase(&conj, h, o).unwrap()).norm());
    }
    for _ in 0..RANDOM_WORDS {
        let w = random_word(&mut rng, 30);
        let b = tau_matrix(&w, Handedness::Right, o).unwrap();
        let bi = tau_matrix(&w.inverse(), Handedness::Right, o).unwrap();
        for t in &hermitian {
            worst = worst.max((distance(&b, t).unwrap() - distance(&bi, t).unwrap()).abs());
        }
    }
    ensure(worst < APPENDIX_TOL, || format!("worst residual {worst:.2e}"))?;
    Ok(format!("Γ-similarity and Hermitian symmetry, worst {worst:.2e} < {APPENDIX_TOL:e}"))
}

fn c4_standalone() -> Outcome {
    let rows = fixtures::word_fixtures();
    let p = calibrate_conventions(&rows).map_err(|e| e.to_string())?;
    ensure(p == pinned_profile(), || format!("calibration pins {p}, fixture says {}", pinned_profile()))?;
    let mut worst: f64 = 0.0;
    for r in &rows {
        let e = word_error(&r.word(), &r.target_matrix(), p.handedness, p.word_reading_order).unwrap();
        let d = rel(e, r.printed_error);
        ensure(d < STANDALONE_REL, || format!("{} {}: {e:.4e} vs {:.3e}", r.set, r.role, r.printed_error))?;
        worst = worst.max(d);
    }
    Ok(format!("{} words, profile {p}, worst relative deviation {:.2}%", rows.len(), 100.0 * worst))
}

fn overall(c: &GateCircuit, e: &Evaluation) -> f64 {
    c.references().map(|r| distance(&e.block, r).unwrap()).fold(f64::INFINITY, f64::min)
}

struct CompositeCheck {
    name: &'static str,
    overall: f64,
    leakage: f64,
    exact: f64,
    primary: Vec<String>,
}

fn composite(c: &GateCircuit, fx: &CompositeFixture) -> CompositeCheck {
    let e = evaluate_circuit(c).unwrap();
    let ov = overall(c, &e);
    let lk = leakage(&e.full, &e.computational).unwrap();
    let mut primary = Vec::new();
    if rel(ov, fx.overall) > COMPOSITE_REL {
        primary.push(format!("overall {ov:.4e} vs {:.3e}", fx.overall));
    }
    if lk > fx.leakage * LEAKAGE_FACTOR || lk < fx.leakage / LEAKAGE_FACTOR {
        primary.push(format!("leakage {lk:.3e} vs {:.3e}", fx.leakage));
    }
    let mut blocks: Vec<f64> = c
        .blocks
        .iter()
        .filter(|b| b.active)
        .map(|b| distance(&e.block.submatrix(&b.indices), &b.target).unwrap())
        .collect();
    if !fx.target_blocks.is_empty() {
        // Printed block values are compared as sorted multisets.
        let mut want = fx.target_blocks.to_vec();
        blocks.sort_by(f64::total_cmp);
        want.sort_by(f64::total_cmp);
        for (g, w) in blocks.iter().zip(&want) {
            if rel(*g, *w) > COMPOSITE_REL {
                primary.push(format!("block {g:.4e} vs {w:.3e}"));
            }
        }
    }
    let exact = overall(c, &evaluate_exact(c).unwrap());
    CompositeCheck { name: fx.name, overall: ov, leakage: lk, exact, primary }
}

fn c5_composites() -> Outcome {
    let p = pinned_profile();
    let checks = [
        composite(&fixtures::m_identity_ix(&p).unwrap(), &fixtures::M_IDENTITY_IX),
        composite(&fixtures::m_not_ix(&p).unwrap(), &fixtures::M_NOT_IX),
        composite(&fixtures::itoffoli(&p).unwrap(), &fixtures::ITOFFOLI_CI),
        composite(&fixtures::itoffoli_decomposition(&p).unwrap(), &fixtures::ITOFFOLI_DECOMPOSITION),
    ];
    for c in &checks {
        println!(
            "    {}: overall {:.4e}, leakage {:.3e}, exact limit {:.1e}{}",
            c.name,
            c.overall,
            c.leakage,
            c.exact,
            if c.primary.is_empty() { String::new() } else { format!(", off: {}", c.primary.join(", ")) }
        );
    }
    if checks.iter().all(|c| c.primary.is_empty()) {
        return Ok("all builds within 10% (errors) and ×2 (leakage)".into());
    }
    // The fallback: exact limits and order of magnitude for every build.
    for c in &checks {
        ensure(c.exact < EXACT_TOL, || format!("{}: exact limit {:.2e}", c.name, c.exact))?;
        ensure(c.overall < FALLBACK_CEILING, || format!("{}: overall {:.3e}", c.name, c.overall))?;
    }
    let off: Vec<&str> = checks.iter().filter(|c| !c.primary.is_empty()).map(|c| c.name).collect();
    Ok(format!(
        "via fallback: exact limits < {EXACT_TOL:e}, overall < {FALLBACK_CEILING:e}; outside 10%: {}",
        off.join(", ")
    ))
}

fn c6_accounting() -> Outcome {
    let p = pinned_profile();
    let ci = score_gate(&fixtures::itoffoli(&p).unwrap()).unwrap();
    let d = score_gate(&fixtures::itoffoli_decomposition(&p).unwrap()).unwrap();
    let r = comparison_report(&ci, &d, None, None).map_err(|e| e.to_string())?;
    for (label, a, b) in [
        ("Length at L=48", "1200", "1472"),
        ("Depth at L=48", "1056", "1472"),
        ("Two-qubit gates", "4", "7"),
    ] {
        let row = r.row(label).ok_or_else(|| format!("missing row {label}"))?;
        ensure(row.controlled_injection == a && row.decomposition == b, || {
            format!("{label}: {} vs {}", row.controlled_injection, row.decomposition)
        })?;
    }
    ensure(r.word_length == 48, || format!("L = {}", r.word_length))?;
    Ok("lengths 1200/1472, depths 1056/1472, two-qubit gates 4/7".into())
}

fn run_search(target: &UnitaryMatrix, budget: usize, endpoint: Endpoint, pruned: bool) -> su2_compile::SearchResult {
    let mut spec = WeaveSearchSpec::new(target.clone(), budget, endpoint);
    spec.pruned = pruned;
    spec.top_k = 8;
    search(&spec).unwrap()
}

fn c7_search() -> Outcome {
    let targets = [("I", gates::identity()), ("iX", gates::i_x()), ("sqrtiX", gates::sqrt_i_x()), ("H", gates::hadamard())];
    let mut cases = 0;
    for (name, t) in &targets {
        for endpoint in [Endpoint::SameStrand, Endpoint::TopToBottom] {
            for budget in (4..=14).step_by(2) {
                let a = run_search(t, budget, endpoint, true).best().unwrap().error;
                let b = run_search(t, budget, endpoint, false).best().unwrap().error;
                ensure((a - b).abs() < SEARCH_TOL, || format!("{name} {endpoint:?} L={budget}: {a} vs {b}"))?;
                cases += 1;
            }
        }
    }
    let mut spec = WeaveSearchSpec::new(gates::i_x(), 12, Endpoint::SameStrand);
    spec.top_k = 8;
    let whole = search(&spec).unwrap();
    let parts: Vec<_> = (0..5)
        .map(|k| {
            let mut s = spec.clone();
            s.shard = Shard { index: k, total: 5 };
            search(&s).unwrap()
        })
        .collect();
    ensure(merge(&parts, 8).unwrap() == whole, || "shard merge differs from the unsharded run".into())?;
    let mut bests = Vec::new();
    for budget in [8, 12, 16, 20] {
        bests.push(run_search(&gates::i_x(), budget, Endpoint::SameStrand, true).best().unwrap().error);
    }
    ensure(bests.windows(2).all(|w| w[1] <= w[0] + SEARCH_TOL), || format!("iX bests {bests:?}"))?;
    Ok(format!(
        "{cases} pruned/exhaustive pairs agree, 5-way shard merge exact, iX best {}",
        bests.iter().map(|e| format!("{e:.3e}")).collect::<Vec<_>>().join(" ≥ ")
    ))
}

fn c8_exact_identities() -> Outcome {
    let s = gates::i_x();
    let mut worst: f64 = 0.0;
    // Qubit level.
    for u in [gates::i_x(), gates::sqrt_i_x(), gates::hadamard()] {
        worst = worst.max(reference::three_controlled_product(&u).unwrap().max_abs_diff(&reference::m_identity(&u)));
    }
    let five = reference::five_gate_product(&gates::sqrt_i_x()).unwrap();
    worst = worst.max(five.max_abs_diff(&reference::ccs(&s)));
    let m_prod = reference::m_identity(&s.adjoint()).matmul(&reference::m_not(&s));
    worst = worst.max(m_prod.max_abs_diff(&reference::ccs(&s)));
    // Circuit level, every word replaced by its exact gate.
    let p = pinned_profile();
    let w = |x: &str| -> BraidWord { x.parse().unwrap() };
    let m_not = braid_circuits::build_m_gate(&p, &w(fixtures::R_NOT_CCS), &w(fixtures::INJECT_CCS), &w(fixtures::NOT), &s, None)
        .unwrap();
    let m_id = braid_circuits::build_m_gate(
        &p,
        &w(fixtures::R_IDENTITY),
        &w(fixtures::INJECT),
        &w(fixtures::NOT).inverse(),
        &s.adjoint(),
        None,
    )
    .unwrap();
    let joined = m_not.then(&m_id, "M(I,S†)·M(iX,S)", reference::ccs(&s)).unwrap();
    let builds = [joined, fixtures::itoffoli(&p).unwrap(), fixtures::itoffoli_decomposition(&p).unwrap(), m_id];
    for c in &builds {
        let e = evaluate_exact(c).unwrap();
        // The overall sign of S is not fixed by a word, so ±S both count.
        let d = c
            .references()
            .flat_map(|r| [r.clone(), r.scale(C64::new(-1.0, 0.0))])
            .chain(std::iter::once(reference::ccs(&s.scale(C64::new(-1.0, 0.0)))))
            .map(|r| distance(&e.block, &r).unwrap())
            .fold(f64::INFINITY, f64::min);
        ensure(d < EXACT_TOL, || format!("{}: {d:.2e}", c.name))?;
        worst = worst.max(d);
    }
    ensure(worst < EXACT_TOL, || format!("worst residual {worst:.2e}"))?;
    let (_, enc) = encode_qubits(3).unwrap();
    Ok(format!("qubit and circuit level ({} computational states), worst {worst:.2e}", enc.computational_indices.len()))
}

#[test]
fn acceptance() {
    let profile: ConventionProfile = pinned_profile();
    println!("acceptance under profile {profile}");
    let lines = [
        criterion(1, "dimension suite", Duration::from_secs(1), c1_dimensions),
        criterion(2, "algebra suite", Duration::from_secs(30), c2_algebra),
        criterion(3, "appendix suites", Duration::from_secs(30), c3_appendix),
        criterion(4, "published standalone words", Duration::from_secs(10), c4_standalone),
        criterion(5, "composite gates", Duration::from_secs(300), c5_composites),
        criterion(6, "accounting", Duration::from_secs(60), c6_accounting),
        criterion(7, "search soundness", Duration::from_secs(600), c7_search),
        criterion(8, "exact-limit identities", Duration::from_secs(60), c8_exact_identities),
    ];
    for l in &lines {
        println!("criterion {} {}: {} ({})", l.id, if l.passed { "PASS" } else { "FAIL" }, l.name, l.detail);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.passed).map(|l| l.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
