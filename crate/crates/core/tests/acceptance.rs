//! Acceptance suite. One line per criterion; exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cyclehull::census::{
    ab_recursion, circcirc_count, count_band, face_count_binomial5, face_count_lucas,
    face_polynomial, fibonacci, generating_series_check, s_power_decomposition, lucas,
    lucas_congruence, pascal_identity, za_identity,
};
use cyclehull::hull::{build_hull, max_cube_decomposition, VertexFunction};
use cyclehull::moebius::{
    band_sites, double_embed, enumerate_band_partitions, enumerate_circ, enumerate_circcirc,
    fibre_catalan, fold, fold_fibre, fold_with_trace, FoldPart,
};
use cyclehull::oracle::{self, FiniteMetric, DEFAULT_CAP};
use cyclehull::partitions::{
    cycle_distance, enumerate_yn, tau, tau_pow, xn_distance, young_distance,
};
use cyclehull::{ModelSpace, Partition, SpaceKind, TPoly};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

fn pow2(e: usize) -> BigInt {
    BigInt::from(1u8) << e
}

fn cardinalities() -> Check {
    for n in 1..=12 {
        let got = enumerate_yn(n).len();
        ensure!(got == 1 << (n - 1), "|Y_{n}| = {got}");
    }
    Ok(())
}

fn isometry() -> Check {
    for n in 1..=9 {
        let ys = enumerate_yn(n);
        let images: Vec<Partition> = ys.iter().map(|l| tau(l, n).unwrap()).collect();
        for (a, ta) in ys.iter().zip(&images) {
            ensure!(&tau_pow(a, n, n).unwrap() == a, "τ^{n} moves {a} at N={n}");
            for (b, tb) in ys.iter().zip(&images) {
                ensure!(
                    young_distance(a, b) == young_distance(ta, tb),
                    "N={n}: d({a},{b}) not preserved"
                );
            }
        }
    }
    Ok(())
}

fn vertex_counts() -> Check {
    let expected = [4u64, 11, 29, 76, 199, 521];
    for (idx, n) in (3..=13).step_by(2).enumerate() {
        let enumerated = BigInt::from(enumerate_circ(n).len());
        let trace = count_band(n, 1).map_err(|e| e.to_string())?;
        let fib = fibonacci(n as u64 - 1) + fibonacci(n as u64 + 1);
        let want = BigInt::from(expected[idx]);
        ensure!(lucas(n as u64) == want, "L_{n} = {}", lucas(n as u64));
        ensure!(
            enumerated == want && trace == want && fib == want,
            "N={n}: enumeration {enumerated}, trace {trace}, Fibonacci {fib}, expected {want}"
        );
    }
    Ok(())
}

fn face_census() -> Check {
    for n in (1..=13).step_by(2) {
        let hull = build_hull(SpaceKind::Cycle, n).map_err(|e| e.to_string())?;
        let fv = hull.f_vector();
        let poly = face_polynomial(n).map_err(|e| e.to_string())?;
        let k = n / 2;
        ensure!(fv.len() == k + 1, "N={n}: f-vector {fv:?}");
        for (v, &f) in fv.iter().enumerate() {
            let f = BigInt::from(f);
            let v64 = v as u64;
            ensure!(poly.coeff(v) == f, "N={n} v={v}: polynomial {}", poly.coeff(v));
            ensure!(
                face_count_binomial5(n, v64).unwrap() == f,
                "N={n} v={v}: binomial form"
            );
            ensure!(face_count_lucas(n, v64).unwrap() == f, "N={n} v={v}: Lucas form");
        }
        ensure!(poly.degree() == Some(k), "N={n}: degree {:?}", poly.degree());
        let total: u64 = fv.iter().sum();
        ensure!(total + 1 == 1u64 << n, "N={n}: Σ f_v = {total}");
        ensure!(hull.euler_characteristic() == 1, "N={n}: χ = {}", hull.euler_characteristic());
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let cases = [
        (SpaceKind::Cycle, 3),
        (SpaceKind::Cycle, 5),
        (SpaceKind::Cycle, 7),
        (SpaceKind::Xn, 3),
        (SpaceKind::Xn, 4),
        (SpaceKind::Xn, 5),
        (SpaceKind::Xn, 6),
    ];
    for (kind, n) in cases {
        let space = ModelSpace::new(kind, n).unwrap();
        let metric = FiniteMetric::from_space(&space);
        let hull = build_hull(kind, n).unwrap();
        let cmp = oracle::compare(&metric, &hull, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure!(cmp.is_match(), "{kind} N={n}: {cmp:?}");
    }
    Ok(())
}

fn folding() -> Check {
    let res = fold_with_trace(&p("11,9,7,7,7,6,6,6,6,6,6,3"), 23).unwrap();
    ensure!(
        res.partition == p("11,9,8,7,7,6,6,5,4,3,2,1"),
        "N=23 example gives {}",
        res.partition
    );
    let upper = res.trace.iter().filter(|s| s.part == FoldPart::Upper).count();
    ensure!(upper == 12 && res.trace.len() == 13, "N=23 trace {:?}", res.trace);

    for n in 1..=9 {
        let ys = enumerate_yn(n);
        let folded: Vec<Partition> = ys.iter().map(|l| fold(l, n).unwrap()).collect();
        for (l, f) in ys.iter().zip(&folded) {
            ensure!(&fold(f, n).unwrap() == f, "N={n}: fold not idempotent at {l}");
            let lhs = fold(&tau(l, n).unwrap(), n).unwrap();
            ensure!(lhs == tau(f, n).unwrap(), "N={n}: not equivariant at {l}");
        }
        for (a, fa) in ys.iter().zip(&folded) {
            for (b, fb) in ys.iter().zip(&folded) {
                ensure!(
                    young_distance(fa, fb) <= young_distance(a, b),
                    "N={n}: fold expands ({a}), ({b})"
                );
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(0x00c1_c1e5);
    for n in [11, 13] {
        let ys = enumerate_yn(n);
        let folded: Vec<Partition> = ys.iter().map(|l| fold(l, n).unwrap()).collect();
        for _ in 0..100_000 {
            let i = rng.gen_range(0..ys.len());
            let j = rng.gen_range(0..ys.len());
            ensure!(
                young_distance(&folded[i], &folded[j]) <= young_distance(&ys[i], &ys[j]),
                "N={n}: fold expands ({}), ({})",
                ys[i],
                ys[j]
            );
            let l = &ys[i];
            ensure!(fold(&folded[i], n).unwrap() == folded[i], "N={n}: not idempotent at {l}");
            let lhs = fold(&tau(l, n).unwrap(), n).unwrap();
            ensure!(lhs == tau(&folded[i], n).unwrap(), "N={n}: not equivariant at {l}");
        }
    }
    Ok(())
}

fn fibres() -> Check {
    let n = 11;
    let circ = enumerate_circ(n);
    let mut sizes = BTreeSet::new();
    let mut total = 0u64;
    for lam in &circ {
        let size = fold_fibre(lam, n).unwrap().len() as u64;
        let word = fibre_catalan(lam, n).unwrap();
        ensure!(word.product() == size, "({lam}): {word} vs {size}");
        sizes.insert(size);
        total += size;
    }
    ensure!(total == 1 << (n - 1), "Σ fibre sizes = {total}");
    let want: BTreeSet<u64> = [1, 2, 4, 5, 14, 42].into();
    ensure!(sizes == want, "fibre sizes {sizes:?}");
    for (lam, size) in [("5,5,4,3,2,1", 42), ("5,4,3,2,1,1", 1), ("5,5,4,2,2,1", 4)] {
        let got = fold_fibre(&p(lam), n).unwrap().len();
        ensure!(got == size, "({lam}): fibre size {got}");
    }

    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for lam in &circ {
        if seen.insert(lam.clone()) {
            orbits += 1;
            let mut x = tau(lam, n).unwrap();
            while &x != lam {
                seen.insert(x.clone());
                x = tau(&x, n).unwrap();
            }
        }
    }
    ensure!(orbits == 19, "{orbits} τ-orbits in Y_11°");

    for m in 2..=12 {
        let mut total = 0u64;
        for lam in enumerate_circ(m) {
            let size = fold_fibre(&lam, m).unwrap().len() as u64;
            ensure!(
                fibre_catalan(&lam, m).unwrap().product() == size,
                "N={m} ({lam}): not a Catalan product"
            );
            total += size;
        }
        ensure!(total == 1 << (m - 1), "N={m}: Σ fibre sizes = {total}");
    }
    Ok(())
}

fn maximal_cubes() -> Check {
    for n in [5, 7, 9, 11] {
        let k = n / 2;
        let mc = max_cube_decomposition(n).map_err(|e| e.to_string())?;
        let want = 1 + (2 * k + 1) * (1 << (k - 1));
        ensure!(mc.cubes.len() == n, "N={n}: {} cubes", mc.cubes.len());
        ensure!(mc.cubes.iter().all(|c| c.dim() == k), "N={n}: cube dimension");
        ensure!(mc.incident.len() == want, "N={n}: {} incident", mc.incident.len());
        ensure!(
            mc.incident.len() + mc.extras.len() == enumerate_circ(n).len(),
            "N={n}: incident and extras do not cover Y_N°"
        );
        match n {
            5 | 7 => ensure!(mc.extras.is_empty(), "N={n}: extras {:?}", mc.extras),
            9 => {
                let got: BTreeSet<Partition> = mc.extras.iter().cloned().collect();
                let want: BTreeSet<Partition> =
                    [p("3,3,3"), p("5,2,2,2"), p("4,4,1,1,1")].into();
                ensure!(got == want, "N=9: extras {got:?}");
            }
            _ => {
                ensure!(mc.extras.len() == 22, "N=11: {} extras", mc.extras.len());
                ensure!(mc.incident.len() == 177, "N=11: {} incident", mc.incident.len());
            }
        }
    }
    Ok(())
}

fn doubled_pair(n: usize) -> [Partition; 2] {
    let first: Vec<u32> = (0..n as u32 / 2)
        .flat_map(|i| [n as u32 - 1 - 2 * i; 2])
        .collect();
    let mut second = vec![n as u32];
    second.extend((1..=n as u32 / 2).flat_map(|i| [n as u32 - 2 * i; 2]));
    [
        Partition::new(first).unwrap(),
        Partition::new(second).unwrap(),
    ]
}

fn circcirc() -> Check {
    let expected: [u64; 10] = [1, 4, 6, 15, 31, 67, 144, 309, 664, 1426];
    for (k, &want) in expected.iter().enumerate() {
        let got = circcirc_count(k);
        ensure!(got == BigInt::from(want), "k={k}: {got}");
        if k <= 5 {
            let enumerated = enumerate_circcirc(2 * k + 1).len() as u64;
            ensure!(enumerated == want, "k={k}: enumeration {enumerated}");
        }
    }
    for n in (3..=9).step_by(2) {
        let pair = doubled_pair(n);
        let got = enumerate_circcirc(2 * n);
        let mut want = pair.to_vec();
        want.sort();
        ensure!(got == want, "2N={}: {got:?}", 2 * n);
        ensure!(tau(&pair[0], 2 * n).unwrap() == pair[1], "2N={}: τ", 2 * n);
        ensure!(tau(&pair[1], 2 * n).unwrap() == pair[0], "2N={}: τ", 2 * n);
    }
    for n in (2..=8).step_by(2) {
        let got = enumerate_circcirc(2 * n);
        ensure!(got.is_empty(), "2N={}: {got:?}", 2 * n);
    }
    Ok(())
}

fn band_counts() -> Check {
    for n in 2..=13 {
        let k = n / 2;
        for m in 1..=k {
            let trace = count_band(n, m).map_err(|e| e.to_string())?;
            let enumerated = BigInt::from(enumerate_band_partitions(n, m).unwrap().len());
            ensure!(trace == enumerated, "N={n} m={m}: trace {trace}, enumeration {enumerated}");
        }
        if n % 2 == 1 {
            ensure!(count_band(n, 1).unwrap() == lucas(n as u64), "N={n}: m=1 is not L_N");
        }
        ensure!(count_band(n, k).unwrap() == pow2(n - 1), "N={n}: m=k is not 2^(N-1)");
    }
    Ok(())
}

/// The vertex functions are `v_0 + Σ_{i∈S} d_i` over all `S ⊆ [k]`, and the
/// edges join exactly the pairs differing in one direction.
fn realizes_cube(values: &[VertexFunction], edges: &[(usize, usize)], k: usize) -> Check {
    ensure!(values.len() == 1 << k, "{} vertices", values.len());
    ensure!(edges.len() == k << (k.max(1) - 1), "{} edges", edges.len());
    let mut adj = vec![Vec::new(); values.len()];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let base = values
        .iter()
        .enumerate()
        .min_by_key(|(_, f)| f.values.iter().sum::<i64>())
        .map(|(i, _)| i)
        .unwrap();
    ensure!(adj[base].len() == k, "base vertex has degree {}", adj[base].len());
    let dirs: Vec<Vec<i64>> = adj[base]
        .iter()
        .map(|&j| {
            values[j]
                .values
                .iter()
                .zip(&values[base].values)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    let mut position: BTreeMap<Vec<i64>, u32> = BTreeMap::new();
    for mask in 0u32..1 << k {
        let mut v = values[base].values.clone();
        for (i, d) in dirs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.iter_mut().zip(d).for_each(|(x, y)| *x += y);
            }
        }
        position.insert(v, mask);
    }
    ensure!(position.len() == 1 << k, "cube corners collide");
    let masks: Vec<u32> = values
        .iter()
        .map(|f| position.get(&f.values).copied())
        .collect::<Option<_>>()
        .ok_or("a vertex is not a cube corner")?;
    for &(a, b) in edges {
        ensure!((masks[a] ^ masks[b]).count_ones() == 1, "edge is not a cube edge");
    }
    Ok(())
}

fn even_cycles() -> Check {
    for k in 1..=5 {
        let n = 2 * k;
        let hull = build_hull(SpaceKind::Cycle, n).map_err(|e| e.to_string())?;
        let graph = hull.skeleton();
        let values: Vec<VertexFunction> = graph.nodes.iter().map(|v| v.values.clone()).collect();
        realizes_cube(&values, &graph.edges, k).map_err(|e| format!("N={n}: {e}"))?;
        let cube = TPoly::from_ints(&[2, 1]).pow(k as u32);
        let poly = face_polynomial(n).unwrap();
        ensure!(poly == cube, "N={n}: {poly}");
        let fv: Vec<BigInt> = hull.f_vector().into_iter().map(BigInt::from).collect();
        ensure!(fv == cube.coeffs(), "N={n}: f-vector {fv:?}");
    }
    Ok(())
}

fn identities() -> Check {
    for n in 1..=12 {
        ensure!(s_power_decomposition(n).unwrap(), "S^{n} decomposition");
        ensure!(ab_recursion(n).unwrap(), "a/b recursion at {n}");
    }
    ensure!(za_identity(), "ZA = S² - tS");
    for k in 2..=30 {
        ensure!(pascal_identity(k), "Pascal identity at k={k}");
    }
    for prime in [3, 5, 7, 11, 13, 17, 19, 23] {
        ensure!(lucas_congruence(prime), "L_{prime} mod {prime}");
    }
    ensure!(generating_series_check(20), "generating series up to q^20");
    Ok(())
}

fn band_shift() -> Check {
    for n in (3..=13).step_by(2) {
        let k = n / 2;
        for site in band_sites(n, 1).unwrap() {
            let x = xn_distance(site.i, site.j, n).unwrap();
            let c = cycle_distance(site.i, site.j, n).unwrap();
            ensure!(x == c + (k * k - k) as u64, "N={n} site {site}: {x} vs {c}");
        }
    }
    Ok(())
}

fn doubling() -> Check {
    for n in [5, 7] {
        let circ = enumerate_circ(n);
        let big: BTreeSet<Partition> = enumerate_circ(2 * n).into_iter().collect();
        let mut image = BTreeSet::new();
        for lam in &circ {
            let d = double_embed(lam, n).map_err(|e| e.to_string())?;
            ensure!(big.contains(&d), "N={n}: ({d}) not in Y_2N°");
            let lhs = double_embed(&tau(lam, n).unwrap(), n).unwrap();
            ensure!(lhs == tau_pow(&d, 2 * n, 2).unwrap(), "N={n}: τ compatibility at ({lam})");
            image.insert(d);
        }
        ensure!(image.len() == circ.len(), "N={n}: not injective");
        if n == 5 {
            let shifted: BTreeSet<Partition> =
                image.iter().map(|d| tau(d, 2 * n).unwrap()).collect();
            let rest: BTreeSet<Partition> = big
                .iter()
                .filter(|x| !image.contains(*x) && !shifted.contains(*x))
                .cloned()
                .collect();
            ensure!(rest.len() == 32 - 2 * 11, "complement has {} elements", rest.len());
            let seed = p("5,4,2,2,1");
            ensure!(rest.contains(&seed), "complement misses (5,4,2,2,1)");
            let orbit: BTreeSet<Partition> =
                (0..2 * n).map(|e| tau_pow(&seed, 2 * n, e).unwrap()).collect();
            ensure!(orbit == rest, "complement is not one τ-orbit");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("cardinalities |Y_N| = 2^(N-1), N <= 12", cardinalities),
        ("tau isometry and tau^N = id, N <= 9", isometry),
        ("vertex counts |Y_N°| = L_N, odd N <= 13", vertex_counts),
        ("face census of E(C_N), odd N <= 13", face_census),
        ("oracle equivalence C_3, C_5, C_7, X_3..X_6", oracle_equivalence),
        ("folding idempotent, equivariant, non-expanding", folding),
        ("fibres are Catalan products, N = 11", fibres),
        ("maximal cubes, N in {5,7,9,11}", maximal_cubes),
        ("Y°° counts and Y_2N°°", circcirc),
        ("band counts by trace and enumeration, N <= 13", band_counts),
        ("even cycles are k-cubes, k <= 5", even_cycles),
        ("matrix and sequence identities", identities),
        ("X_N° distance shift k²-k, odd N <= 13", band_shift),
        ("doubling embedding, N in {5,7}", doubling),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("[PASS] {:>2}. {name} ({secs:.2}s)", idx + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name} ({secs:.2}s): {why}", idx + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
