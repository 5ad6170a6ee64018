//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{brute_force, naive_count, search_hits, small_groups, two_eigenvalue, Zw};
use frameforge::cube::{counting_criterion, cube_seidel_matrix};
use frameforge::matrix::is_hadamard;
use frameforge::numeric::frame_from_matrix;
use frameforge::search::{cube_candidates, enumerate_inverse_closed};
use frameforge::signature::{index2_subgroup_set, matrix_criterion, quasi_signature_matrix, signature_matrix};
use frameforge::{
    certify_two_eigenvalue, complement_set, count_pair, cube_necessary_conditions, diffset_to_signature, search,
    switch, verify_difference_set, verify_frame, verify_quasi_signature_pair, verify_quasi_signature_set,
    verify_signature_pair, verify_signature_set, CubeContext, CubePartition, EisensteinInt, ElementIndex, GroupTable,
    Representation, SearchSpec, SignatureKind, SquareMatrix, SubsetMask,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs one criterion and prints its line; a panic counts as a failure.
fn criterion(id: u32, name: &str, body: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(detail) => println!("PASS {id} {name} ({secs:.2}s): {detail}"),
        Err(detail) => println!("FAIL {id} {name} ({secs:.2}s): {detail}"),
    }
    outcome.is_ok()
}

fn timed<T>(budget: Duration, label: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    ensure(took < budget, format!("{label} took {took:?}, budget {budget:?}"))?;
    Ok(out)
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = frameforge::cli::run(std::iter::once("frameforge").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn normalize(text: &str) -> String {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join("\n")
}

fn expected_table(ms: &[u64], n_of: impl Fn(u64) -> u64) -> String {
    let mut lines = vec!["m (n,k)".to_string()];
    lines.extend(ms.iter().map(|&m| format!("{m} ({},{})", n_of(m), n_of(m) / 2)));
    lines.join("\n")
}

const TABLE_1_M: [u64; 31] = [
    0, 1, 3, 4, 6, 7, 12, 18, 21, 22, 24, 33, 36, 39, 43, 46, 48, 52, 57, 63, 67, 69, 76, 81, 82, 84, 87, 88, 94, 96,
    99,
];

const TABLE_2_M: [u64; 32] = [
    2, 5, 12, 17, 24, 39, 50, 51, 56, 65, 71, 95, 96, 101, 107, 116, 122, 126, 141, 162, 170, 176, 186, 212, 234, 249,
    260, 267, 269, 270, 287, 297,
];

fn table_check(algorithm: &str, max_m: &str, ms: &[u64], n_of: impl Fn(u64) -> u64) -> Check {
    let (code, out) =
        timed(Duration::from_secs(1), "tables", || run_cli(&["tables", "--algorithm", algorithm, "--max-m", max_m]))?;
    ensure(code == 0, format!("exit code {code}"))?;
    let (got, want) = (normalize(&out), expected_table(ms, n_of));
    if got != want {
        let diff = got.lines().zip(want.lines()).find(|(a, b)| a != b);
        return Err(format!(
            "{} rows emitted, {} expected; first difference {diff:?}",
            got.lines().count() - 1,
            ms.len()
        ));
    }
    Ok(format!("{} rows match", ms.len()))
}

fn table_1() -> Check {
    table_check("thm59", "99", &TABLE_1_M, |m| 8 * m + 6)
}

fn table_2() -> Check {
    let out = table_check("thm511", "299", &TABLE_2_M, |m| 8 * m + 2)?;
    let last = TABLE_2_M[TABLE_2_M.len() - 1];
    ensure((8 * 2 + 2, 8 * last + 2) == (18, 2378), "table endpoints")?;
    Ok(format!("{out}, (18,9) to (2378,1189)"))
}

const REFERENCE_6: [[i64; 6]; 6] = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, -1, -1, 1],
    [1, 1, 0, 1, -1, -1],
    [1, -1, 1, 0, 1, -1],
    [1, -1, -1, 1, 0, 1],
    [1, 1, -1, -1, 1, 0],
];

const REFERENCE_14: [[i64; 14]; 14] = [
    [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1],
    [1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1],
    [1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1],
    [1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1, 1],
    [1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1, -1],
    [1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1, -1],
    [1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1, -1],
    [1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1, -1],
    [1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1, 1],
    [1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1, 1],
    [1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1, -1],
    [1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0, 1],
    [1, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1, 0],
];

/// `0`, `1`, `w`, `w^2` as 0..=3.
const REFERENCE_9: [[u8; 9]; 9] = [
    [0, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 0, 1, 2, 3, 2, 3, 2, 3],
    [1, 1, 0, 3, 2, 3, 2, 3, 2],
    [1, 3, 2, 0, 1, 3, 2, 2, 3],
    [1, 2, 3, 1, 0, 2, 3, 3, 2],
    [1, 3, 2, 2, 3, 0, 1, 3, 2],
    [1, 2, 3, 3, 2, 1, 0, 2, 3],
    [1, 3, 2, 3, 2, 2, 3, 0, 1],
    [1, 2, 3, 2, 3, 3, 2, 1, 0],
];

fn real_golden<const N: usize>(p: usize, set: &[usize], reference: &[[i64; N]; N]) -> Result<(), String> {
    let g = GroupTable::cyclic(p).unwrap();
    let s = SubsetMask::from_indices(p, set.iter().copied()).unwrap();
    let q = quasi_signature_matrix(&g, &s).map_err(|e| e.to_string())?;
    let m = q.matrix();
    for (i, row) in reference.iter().enumerate() {
        ensure(m.row(i) == &row[..], format!("{N}x{N} row {i} differs: {:?}", m.row(i)))?;
    }
    let want = SquareMatrix::identity(N).scale(N as i64 - 1);
    ensure(m.matmul(m) == want, format!("{N}x{N}: Q^2 != {}I", N - 1))
}

fn reference_matrices() -> Check {
    real_golden(5, &[1, 4], &REFERENCE_6)?;
    real_golden(13, &[1, 3, 4, 9, 10, 12], &REFERENCE_14)?;

    let g = GroupTable::quaternion8();
    let s = g.parse_subset("-1").unwrap();
    let t = g.parse_subset("i,j,k").unwrap();
    let p = CubePartition::new(&g, &s, &t).unwrap();
    let q = cube_seidel_matrix(&g, &p, true, Representation::Right).map_err(|e| e.to_string())?;
    let cell = [EisensteinInt::ZERO, EisensteinInt::ONE, EisensteinInt::OMEGA, EisensteinInt::OMEGA2];
    let reference = SquareMatrix::from_fn(9, |i, j| cell[REFERENCE_9[i][j] as usize]);
    ensure(q.matrix() == &reference, "9x9 differs from the reference matrix")?;
    let m = q.matrix();
    let want = &SquareMatrix::identity(9).scale(EisensteinInt::from_int(8)) - &m.scale(EisensteinInt::from_int(2));
    ensure(m.matmul(m) == want, "9x9: Q^2 != 8I - 2Q")?;
    let v = verify_quasi_signature_pair(&g, &s, &t).map_err(|e| e.to_string())?;
    ensure((v.params.n, v.params.k, v.witness_mu) == (9, 6, -2), "quaternion pair is not (9,6), mu = -2")?;
    Ok("6x6, 14x14 and 9x9 match entry for entry".into())
}

fn instance(desc: &str, set: &str, quasi: bool, want: (u64, u64), mu: Option<i64>) -> Result<String, String> {
    timed(Duration::from_secs(1), desc, || {
        let g = GroupTable::from_descriptor(desc).unwrap();
        let s = g.parse_subset(set).unwrap();
        let v = if quasi { verify_quasi_signature_set(&g, &s) } else { verify_signature_set(&g, &s) }
            .map_err(|e| format!("{desc}: {e}"))?;
        ensure((v.params.n, v.params.k) == want, format!("{desc}: got ({},{})", v.params.n, v.params.k))?;
        if let Some(mu) = mu {
            ensure(v.witness_mu == mu, format!("{desc}: mu = {}", v.witness_mu))?;
        }
        Ok(format!("{desc} ({},{})", want.0, want.1))
    })?
}

const C4XC4_AXES: &str = "(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)";

fn instances() -> Check {
    let c6xc6 = (1..6).flat_map(|i| [format!("({i},0)"), format!("(0,{i})"), format!("({i},{i})")]);
    let c5xc5 = (1..5).flat_map(|i| [format!("({i},0)"), format!("(0,{i})"), format!("({i},{i})")]);
    let done = [
        instance("C4xC4", C4XC4_AXES, false, (16, 6), Some(2))?,
        instance("C6xC6", &c6xc6.collect::<Vec<_>>().join(","), false, (36, 15), Some(2))?,
        instance("C3xC3", "(1,0),(2,0),(0,1),(0,2)", true, (10, 5), None)?,
        instance("C5xC5", &c5xc5.collect::<Vec<_>>().join(","), true, (26, 13), None)?,
        timed(Duration::from_secs(1), "index 2", || {
            let g = GroupTable::cyclic(6).unwrap();
            let h = g.parse_subset("0,2,4").unwrap();
            let v = index2_subgroup_set(&g, &h).map_err(|e| e.to_string())?;
            ensure((v.params.n, v.params.k) == (6, 1), "index-2 subgroup is not (6,1)")?;
            Ok::<_, String>("C6 index 2 (6,1)".to_string())
        })??,
    ];
    Ok(done.join(", "))
}

fn z8xz8_set(g: &GroupTable) -> SubsetMask {
    let a = [
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
        (2, 2),
        (2, 3),
        (2, 6),
        (2, 7),
        (3, 2),
        (3, 4),
        (3, 5),
        (3, 7),
        (4, 1),
        (4, 3),
    ];
    let labels: Vec<String> =
        a.iter().flat_map(|&(x, y)| [format!("({x},{y})"), format!("({},{})", (8 - x) % 8, (8 - y) % 8)]).collect();
    g.parse_subset(&labels.join(",")).unwrap()
}

fn difference_sets() -> Check {
    timed(Duration::from_secs(2), "difference-set suite", || {
        let z11 = GroupTable::cyclic(11).unwrap();
        let r = verify_difference_set(&z11, &z11.parse_subset("1,3,4,5,9").unwrap()).map_err(|e| e.to_string())?;
        ensure((r.n, r.k, r.lambda) == (11, 5, 2), format!("Z11 gave {r:?}"))?;

        let c4 = GroupTable::from_descriptor("C4xC4").unwrap();
        let r = verify_difference_set(&c4, &c4.parse_subset(C4XC4_AXES).unwrap()).map_err(|e| e.to_string())?;
        ensure((r.n, r.k, r.lambda, r.reversible, r.hadamard_family) == (16, 6, 2, true, true), format!("{r:?}"))?;

        let g = GroupTable::from_descriptor("C8xC8").unwrap();
        let d = z8xz8_set(&g);
        ensure(d.len() == 28, format!("D has {} elements", d.len()))?;
        let r = verify_difference_set(&g, &d).map_err(|e| e.to_string())?;
        ensure((r.n, r.k, r.lambda, r.reversible) == (64, 28, 12, true), format!("{r:?}"))?;
        let v = diffset_to_signature(&g, &d).map_err(|e| e.to_string())?;
        ensure((v.params.n, v.params.k, v.witness_mu) == (64, 28, 2), "not a (64,28) signature set")?;

        let q = signature_matrix(&g, &d).map_err(|e| e.to_string())?;
        let m = q.matrix();
        let want = &SquareMatrix::identity(64).scale(63) + &m.scale(2);
        ensure(m.matmul(m) == want, "Q^2 != 63I + 2Q")?;
        let h = &SquareMatrix::identity(64) - m;
        ensure(is_hadamard(&h), "I - Q is not Hadamard")?;
        Ok("(11,5,2), (16,6,2), (64,28,12) with Q^2 = 63I + 2Q and I - Q Hadamard".to_string())
    })?
}

fn searches() -> Check {
    let budget = Duration::from_secs(30);
    let run = |desc: &str, kind: SignatureKind, mu: Option<i64>| {
        timed(budget, desc, || {
            let mut spec = SearchSpec::new(GroupTable::from_descriptor(desc).unwrap(), kind);
            spec.mu_filter = mu;
            search(&spec).map_err(|e| e.to_string())
        })
    };

    let c4 = GroupTable::from_descriptor("C4xC4").unwrap();
    let axes = c4.parse_subset(C4XC4_AXES).unwrap();
    let hits = run("C4xC4", SignatureKind::Signature, None)??;
    ensure(hits.iter().any(|h| h.verdict.set == axes), "C4xC4 axes set not found")?;

    let hits = run("C5", SignatureKind::Quasi, None)??;
    let want = SubsetMask::from_indices(5, [1, 4]).unwrap();
    ensure(hits.iter().any(|h| h.verdict.set == want), "{1,4} not found in C5")?;

    for desc in ["C9", "C3xC3"] {
        let hits = run(desc, SignatureKind::CubePair, Some(-2))??;
        ensure(hits.is_empty(), format!("{desc} has {} cube pairs with mu = -2", hits.len()))?;
        let g = GroupTable::from_descriptor(desc).unwrap();
        let unpruned = cube_candidates(&g)
            .filter_map(|(s, t)| verify_signature_pair(&g, &s, &t).ok())
            .filter(|v| v.witness_mu == -2)
            .count();
        ensure(unpruned == 0, format!("{desc}: unpruned scan found {unpruned} pairs with mu = -2"))?;
    }

    let mut total = 0;
    for (desc, p) in [("C6", 3), ("D3", 3), ("C10", 5), ("D5", 5), ("C14", 7), ("D7", 7)] {
        let hits = run(desc, SignatureKind::Signature, None)??;
        let n = 2 * p as u64;
        if let Some(bad) = hits.iter().find(|h| ![1, p as u64, n - 1].contains(&h.verdict.params.k)) {
            return Err(format!("{desc}: hit with k = {}", bad.verdict.params.k));
        }
        total += hits.len();
    }
    Ok(format!("all searches within budget; {total} hits on orders 6, 10, 14 have k in {{1, p, n-1}}"))
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> SubsetMask {
    SubsetMask::from_indices(n, (1..n).filter(|_| rng.gen_bool(0.5))).unwrap()
}

fn symmetrize(g: &GroupTable, s: &SubsetMask) -> SubsetMask {
    s.union(&frameforge::inverse_set(g, s).unwrap())
}

/// Every real-kind check on one inverse-closed `S`.
fn real_properties(g: &GroupTable, s: &SubsetMask, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = g.order();
    let t = complement_set(g, s).unwrap();
    for x in g.elements() {
        ensure(count_pair(g, s, &t, x).unwrap() == count_pair(g, &t, s, x).unwrap(), "N_(S,T) != N_(T,S)")?;
    }
    let coeff = |set: &SubsetMask| -> Vec<Zw> {
        (0..n)
            .map(|x| {
                if x == 0 {
                    Zw::ZERO
                } else if set.contains(ElementIndex(x)) {
                    Zw::ONE
                } else {
                    Zw(-1, 0)
                }
            })
            .collect()
    };
    let nontrivial = !s.is_empty() && !t.is_empty();
    for quasi in [false, true] {
        let kind = if quasi { SignatureKind::Quasi } else { SignatureKind::Signature };
        let verify =
            |set: &SubsetMask| if quasi { verify_quasi_signature_set(g, set) } else { verify_signature_set(g, set) };
        let by_counting = verify(s).ok();
        let oracle = two_eigenvalue(&common::group_matrix(g, &coeff(s), quasi));
        let by_counting_pair = by_counting.as_ref().map(|v| (v.witness_mu, v.params.k));
        ensure(
            by_counting_pair == oracle,
            format!("{} {:?} {kind:?}: counting {by_counting_pair:?} vs oracle {oracle:?}", g.name(), s.indices()),
        )?;
        ensure(matrix_criterion(g, s, kind) == oracle.map(|o| o.0), "matrix criterion disagrees")?;

        let complement = verify(&t).ok();
        ensure(
            by_counting.as_ref().map(|v| (-v.witness_mu, v.params.n - v.params.k))
                == complement.as_ref().map(|v| (v.witness_mu, v.params.k)),
            format!("{} {:?}: complement duality fails ({kind:?})", g.name(), s.indices()),
        )?;

        if !g.is_abelian() {
            for x in g.elements() {
                let conj = g.conjugate_subset(s, x).unwrap();
                ensure(
                    verify(&conj).ok().map(|v| v.params) == by_counting.as_ref().map(|v| v.params),
                    "conjugation changes the verdict",
                )?;
            }
        }

        if let Some(v) = &by_counting {
            let (nf, mu) = (v.params.n as i64, v.witness_mu);
            if nontrivial && !quasi {
                ensure(nf % 2 == 0 && mu % 2 == 0, format!("parity screen contradicted by n = {nf}, mu = {mu}"))?;
            }
            if nontrivial && quasi {
                ensure(
                    nf % 2 == 0 && mu % 2 == 0 && 6 - nf <= 3 * mu && 3 * mu <= nf - 6,
                    format!("quasi screen contradicted by n = {nf}, mu = {mu}"),
                )?;
            }
            let q = if quasi { quasi_signature_matrix(g, s) } else { signature_matrix(g, s) }.unwrap();
            let m = q.n();
            let d: Vec<i64> = (0..m).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
            let mut perm: Vec<usize> = (0..m).collect();
            perm.shuffle(rng);
            let switched = switch(&q, &d, &perm).unwrap();
            let cert = certify_two_eigenvalue(&switched).map_err(|e| e.to_string())?;
            ensure((cert.mu, cert.params.k) == (mu, v.params.k), "switching changed the certificate")?;
        }
    }
    Ok(())
}

fn cube_properties(g: &GroupTable, s: &SubsetMask, t: &SubsetMask) -> Result<(), String> {
    let p = CubePartition::new(g, s, t).unwrap();
    for bordered in [false, true] {
        let verify = if bordered { verify_quasi_signature_pair } else { verify_signature_pair };
        let q = cube_seidel_matrix(g, &p, bordered, Representation::Left).unwrap();
        let by_matrix = certify_two_eigenvalue(&q).ok().map(|c| c.mu);
        let coeff: Vec<Zw> = p.coefficients().iter().map(|z| Zw(z.a, z.b)).collect();
        let oracle = two_eigenvalue(&common::group_matrix(g, &coeff, bordered)).map(|o| o.0);
        let counting = counting_criterion(g, &p, bordered);
        ensure(
            by_matrix == oracle && counting == oracle,
            format!(
                "{} {:?}/{:?}: matrix {by_matrix:?}, counting {counting:?}, oracle {oracle:?}",
                g.name(),
                s.indices(),
                t.indices()
            ),
        )?;
        let verdict = verify(g, s, t).ok();
        if bordered {
            ensure(
                verdict.is_some() == oracle.is_some_and(|mu| mu == s.len() as i64 - t.len() as i64),
                "quasi pair verdict disagrees",
            )?;
        } else {
            ensure(verdict.as_ref().map(|v| v.witness_mu) == oracle, "pair verdict disagrees")?;
        }
        if let Some(v) = verdict.filter(|_| !s.is_empty() && !t.is_empty()) {
            let ctx = if bordered { CubeContext::QuasiPair } else { CubeContext::Pair };
            let screen = cube_necessary_conditions(v.params.n, v.witness_mu, ctx);
            ensure(screen.pass, format!("cube screen contradicted: {:?}", screen.failures))?;
        }
    }
    for x in g.elements() {
        let n_st = naive_count(g, &s.indices(), &t.indices(), x.0);
        ensure(n_st == count_pair(g, s, t, x).unwrap() as i64, "count_pair disagrees with a direct scan")?;
        ensure(
            n_st == naive_count(g, &t.indices(), &s.indices(), x.0) || !g.is_abelian(),
            "abelian counts not symmetric",
        )?;
    }
    Ok(())
}

fn random_group_pool() -> Vec<GroupTable> {
    let mut pool: Vec<GroupTable> =
        ["C9", "C3xC3", "C10", "D5", "C12", "C2xC6", "D6", "C14", "D7", "C15", "C16", "C4xC4", "C2xC8", "D8"]
            .iter()
            .map(|d| GroupTable::from_descriptor(d).expect("valid descriptor"))
            .collect();
    pool.push(GroupTable::direct_product(&GroupTable::quaternion8(), &GroupTable::cyclic(2).unwrap()).unwrap());
    pool
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut checked = 0usize;
    for g in small_groups() {
        for s in enumerate_inverse_closed(&g) {
            real_properties(&g, &s, &mut rng)?;
            checked += 1;
        }
        if g.order() <= 7 {
            for (s, t) in cube_candidates(&g) {
                cube_properties(&g, &s, &t)?;
                checked += 1;
            }
        }
    }
    for g in small_groups().into_iter().filter(|g| g.order() == 8) {
        for (s, t) in cube_candidates(&g) {
            cube_properties(&g, &s, &t)?;
            checked += 1;
        }
    }
    let pool = random_group_pool();
    for _ in 0..300 {
        let g = pool.choose(&mut rng).unwrap();
        let s = symmetrize(g, &random_subset(&mut rng, g.order()));
        real_properties(g, &s, &mut rng)?;
        let (cs, ct): (SubsetMask, SubsetMask) = {
            let candidates: Vec<_> = cube_candidates(g).collect();
            candidates.choose(&mut rng).unwrap().clone()
        };
        cube_properties(g, &cs, &ct)?;
        checked += 2;
    }
    Ok(format!("{checked} instances"))
}

fn numeric_frames() -> Check {
    let tol = 1e-9;
    let mut done = Vec::new();
    let mut check =
        |label: &str,
         result: Result<(frameforge::FrameVectors, frameforge::FrameParams), frameforge::numeric::FrameError>,
         want: (u64, u64)|
         -> Result<(), String> {
            let (frame, params) = result.map_err(|e| format!("{label}: {e}"))?;
            ensure((params.n, params.k) == want, format!("{label}: ({},{})", params.n, params.k))?;
            let r = verify_frame(&frame, &params, tol).map_err(|e| e.to_string())?;
            ensure(r.max_deviation() < tol, format!("{label}: max deviation {:e}", r.max_deviation()))?;
            ensure(r.parseval_deviation < 1e-8, format!("{label}: Parseval deviation {:e}", r.parseval_deviation))?;
            done.push(format!("{label} {:.1e}", r.max_deviation()));
            Ok(())
        };
    for (p, set, want) in [
        (5usize, vec![1usize, 4], (6, 3)),
        (13, vec![1, 3, 4, 9, 10, 12], (14, 7)),
        (17, vec![1, 2, 4, 8, 9, 13, 15, 16], (18, 9)),
    ] {
        let g = GroupTable::cyclic(p).unwrap();
        let q = quasi_signature_matrix(&g, &SubsetMask::from_indices(p, set).unwrap()).unwrap();
        check(&format!("({},{})", want.0, want.1), frame_from_matrix(&q, tol), want)?;
    }
    let g = GroupTable::quaternion8();
    let p = CubePartition::new(&g, &g.parse_subset("-1").unwrap(), &g.parse_subset("i,j,k").unwrap()).unwrap();
    let q = cube_seidel_matrix(&g, &p, true, Representation::Left).unwrap();
    check("(9,6)", frame_from_matrix(&q, tol), (9, 6))?;
    Ok(done.join(", "))
}

fn oracle_equivalence() -> Check {
    let groups = small_groups();
    for g in &groups {
        for kind in SignatureKind::ALL {
            let (found, oracle) = (search_hits(g, kind), brute_force(g, kind));
            ensure(
                found == oracle,
                format!("{} {}: search {} hits, brute force {}", g.name(), kind.as_str(), found.len(), oracle.len()),
            )?;
        }
    }
    Ok(format!("{} groups x 4 kinds", groups.len()))
}

fn main() {
    let results = [
        criterion(1, "table-1", table_1),
        criterion(2, "table-2", table_2),
        criterion(3, "reference-matrices", reference_matrices),
        criterion(4, "instances", instances),
        criterion(5, "difference-sets", difference_sets),
        criterion(6, "searches", searches),
        criterion(7, "properties", properties),
        criterion(8, "numeric-frames", numeric_frames),
        criterion(9, "oracle-equivalence", oracle_equivalence),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
