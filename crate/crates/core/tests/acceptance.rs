//! Acceptance criteria. Prints one `PASS`/`FAIL` line per criterion with its
//! runtime against the budget, and exits non-zero if any criterion fails.
//!
//! Oracles here are written independently of the library: block
//! transpositions from their one-line formula, toric maps from the pointwise
//! difference formula, adjacency from a lookup set of one-line images.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use blocktrans::aut::{check_n_trivial, check_theorem_aut_bt, phi_check, AutOptions};
use blocktrans::graph::{build_bt_graph, hamiltonian_cycle_v};
use blocktrans::sortdist::{distance, SortOptions};
use blocktrans::verify::{toric, VerifyOptions};
use blocktrans::{enumerate_tn, Convention, Cuts, Dihedral, Perm};

type Line = Vec<usize>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

/// One-line form of σ(i,j,k): [1..i, j+1..k, i+1..j, k+1..n].
fn sigma(n: usize, i: usize, j: usize, k: usize) -> Line {
    (1..=i).chain(j + 1..=k).chain(i + 1..=j).chain(k + 1..=n).collect()
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = vec![];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// `(a ∘ b)(x) = a(b(x))`.
fn compose(a: &Line, b: &Line) -> Line {
    b.iter().map(|&x| a[x - 1]).collect()
}

fn inverse(a: &Line) -> Line {
    let mut inv = vec![0; a.len()];
    for (t, &v) in a.iter().enumerate() {
        inv[v - 1] = t + 1;
    }
    inv
}

/// `f_r(π)_t = π_{r+t} - π_r (mod n+1)` with `π_0 = 0`.
fn f(p: &Line, r: usize) -> Line {
    let n = p.len();
    let m = n + 1;
    let at = |x: usize| if x.is_multiple_of(m) { 0 } else { p[x % m - 1] };
    (1..=n).map(|t| (at(r + t) + m - at(r)) % m).collect()
}

/// `f̄_r(π) = f_r(π^{-1})^{-1}`.
fn f_bar(p: &Line, r: usize) -> Line {
    inverse(&f(&inverse(p), r))
}

/// `g(π)_t = n+1 - π_{n+1-t}`.
fn g(p: &Line) -> Line {
    let n = p.len();
    (1..=n).map(|t| n + 1 - p[n - t]).collect()
}

/// The right-invariant group element `f̄^r ∘ g^refl`.
fn dihedral_right(p: &Line, r: usize, refl: bool) -> Line {
    let q = if refl { g(p) } else { p.clone() };
    f_bar(&q, r)
}

struct Oracle {
    n: usize,
    tn: HashSet<Line>,
    decode: HashMap<Line, (usize, usize, usize)>,
}

impl Oracle {
    fn new(n: usize) -> Self {
        let decode: HashMap<Line, (usize, usize, usize)> = triples(n)
            .into_iter()
            .map(|(i, j, k)| (sigma(n, i, j, k), (i, j, k)))
            .collect();
        Oracle {
            n,
            tn: decode.keys().cloned().collect(),
            decode,
        }
    }

    /// Right-invariant adjacency: `u^{-1} ∘ v ∈ T_n`.
    fn adjacent(&self, u: &Line, v: &Line) -> bool {
        self.tn.contains(&compose(&inverse(u), v))
    }

    fn of(&self, c: (usize, usize, usize)) -> Line {
        sigma(self.n, c.0, c.1, c.2)
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let mut bad = vec![];
    for n in 2..=12usize {
        let want = n * (n + 1) * (n - 1) / 6;
        let lib = enumerate_tn(n).map(|v| v.len()).unwrap_or(0);
        if lib != want || triples(n).len() != want {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("|T_n| = n(n+1)(n-1)/6 for 2..=12; mismatches at {bad:?}"))
}

fn criterion_2() -> Outcome {
    let mut bad = vec![];
    for n in 4..=12usize {
        let (mut b, mut l, mut fc, mut s) = (0, 0, 0, 0);
        for c in enumerate_tn(n).expect("n >= 2") {
            match (c.i() == 0, c.k() == n) {
                (true, true) => b += 1,
                (true, false) => l += 1,
                (false, true) => fc += 1,
                (false, false) => s += 1,
            }
            let lib = c.class().to_string();
            let own = match (c.i() == 0, c.k() == n) {
                (true, true) => "B",
                (true, false) => "L",
                (false, true) => "F",
                (false, false) => "S",
            };
            if lib != own {
                bad.push(n);
            }
        }
        let want = (n - 1, (n - 1) * (n - 2) / 2, (n - 1) * (n - 2) / 2, (n - 1) * (n - 2) * (n - 3) / 6);
        if (b, l, fc, s) != want {
            bad.push(n);
        }
    }
    bad.dedup();
    outcome(bad.is_empty(), format!("|B|,|L|,|F|,|S| for 4..=12; mismatches at {bad:?}"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut wrong = 0;
    for n in 4..=8 {
        let oracle = Oracle::new(n);
        for c in enumerate_tn(n).expect("n >= 2") {
            for d in Dihedral::all(n, Convention::Right) {
                let img = dihedral_right(&oracle.of(c.triple()), d.r(), d.reflected());
                let want = oracle.decode.get(&img).copied();
                let got = d.act_on_cuts(&c).ok().map(|x| x.triple());
                checked += 1;
                if want.is_none() || want != got {
                    wrong += 1;
                }
            }
        }
    }
    outcome(wrong == 0, format!("{checked} (element, cut) pairs for 4..=8, {wrong} disagreements"))
}

fn criterion_4() -> Outcome {
    let opts = VerifyOptions::default();
    let mut failures = vec![];
    let mut checks = 0;
    for n in 2..=7 {
        match toric(n, &opts) {
            Ok(report) => {
                checks += report.checks.len();
                failures.extend(report.failures().map(|c| c.claim.clone()));
            }
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    // independent spot check of the pointwise formula against conjugation
    let mut own = 0;
    for n in 2..=5 {
        for p in Perm::all(n) {
            let line = p.one_line();
            for r in 0..=n {
                let lib = blocktrans::toric::toric_map(&p, r).expect("r <= n").one_line();
                if lib != f(&line, r) {
                    own += 1;
                }
                if f(&f(&line, r), n + 1 - r) != line && r != 0 {
                    own += 1;
                }
            }
        }
    }
    outcome(
        failures.is_empty() && own == 0,
        format!(
            "{checks} report checks (exhaustive n<=5, 10^4 samples n=6,7), {} failing {failures:?}; {own} oracle disagreements",
            failures.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for n in 4..=8 {
        let g = build_bt_graph(n).expect("n >= 2");
        let want = if n == 4 { 3 } else { 2 * (n - 2) };
        let degrees: BTreeSet<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
        let oracle = Oracle::new(n);
        let own: BTreeSet<usize> = oracle
            .tn
            .iter()
            .map(|u| oracle.tn.iter().filter(|v| u != *v && oracle.adjacent(u, v)).count())
            .collect();
        let ok = degrees == BTreeSet::from([want]) && own == degrees;
        pass &= ok;
        parts.push(format!("n={n} want {want} got {degrees:?}{}", if ok { "" } else { " FAIL" }));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for n in 5..=8 {
        let oracle = Oracle::new(n);
        let class = |c: (usize, usize, usize)| match (c.0 == 0, c.2 == n) {
            (true, true) => 'B',
            (true, false) => 'L',
            (false, true) => 'F',
            (false, false) => 'S',
        };
        let members = |want: &[char]| -> Vec<Line> {
            triples(n)
                .into_iter()
                .filter(|&c| want.contains(&class(c)))
                .map(|c| oracle.of(c))
                .collect()
        };
        let cross = |v: &Line, part: &[Line]| part.iter().filter(|u| oracle.adjacent(v, u)).count();
        let (b, l, fc, s, lf) = (members(&['B']), members(&['L']), members(&['F']), members(&['S']), members(&['L', 'F']));
        let lf_deg: BTreeSet<usize> = lf.iter().map(|v| cross(v, &b)).collect();
        let b_deg: BTreeSet<usize> = b.iter().map(|v| cross(v, &lf)).collect();
        let l_deg: BTreeSet<usize> = l.iter().map(|v| cross(v, &fc)).collect();
        let f_deg: BTreeSet<usize> = fc.iter().map(|v| cross(v, &l)).collect();
        let bs: usize = b.iter().map(|v| cross(v, &s)).sum();

        let g = build_bt_graph(n).expect("n >= 2");
        let idx = |c: &Cuts| g.index_of(c).expect("vertex");
        let part = |k: char| -> Vec<usize> {
            enumerate_tn(n).unwrap().iter().filter(|c| class(c.triple()) == k).map(idx).collect()
        };
        let (lb, ll, lfv, ls) = (part('B'), part('L'), part('F'), part('S'));
        let llf: Vec<usize> = ll.iter().chain(&lfv).copied().collect();
        let lib_ok = g.bipartite_degrees(&llf, &lb).is_ok_and(|d| {
            llf.iter().all(|v| d[v] == 1) && lb.iter().all(|v| d[v] == n - 2)
        }) && g.bipartite_degrees(&ll, &lfv).is_ok_and(|d| d.values().all(|&x| x == 1))
            && g.bipartite_degrees(&lb, &ls).is_ok_and(|d| d.values().all(|&x| x == 0));

        let ok = lf_deg == BTreeSet::from([1])
            && b_deg == BTreeSet::from([n - 2])
            && l_deg == BTreeSet::from([1])
            && f_deg == BTreeSet::from([1])
            && bs == 0
            && lib_ok;
        pass &= ok;
        parts.push(format!(
            "n={n} LuF->B {lf_deg:?} B->LuF {b_deg:?} L<->F {l_deg:?}/{f_deg:?} B-S {bs}"
        ));
    }
    outcome(pass, parts.join("; "))
}

fn em_closed_forms(n: usize) -> BTreeSet<BTreeSet<(usize, usize, usize)>> {
    let mut out: Vec<[(usize, usize, usize); 2]> = (0..=n - 3)
        .map(|l| [(l, l + 1, l + 3), (l, l + 2, l + 3)])
        .collect();
    out.push([(0, n - 2, n - 1), (0, n - 2, n)]);
    out.push([(1, n - 1, n), (0, 1, n - 1)]);
    out.push([(0, 2, n), (1, 2, n)]);
    out.into_iter().map(|e| e.into_iter().collect()).collect()
}

fn criterion_7() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for n in 5..=8 {
        let oracle = Oracle::new(n);
        let all = triples(n);
        let mut own = BTreeSet::new();
        for (a, &u) in all.iter().enumerate() {
            for &v in &all[a + 1..] {
                let (pu, pv) = (oracle.of(u), oracle.of(v));
                if oracle.adjacent(&pu, &pv)
                    && !all.iter().any(|&w| {
                        let pw = oracle.of(w);
                        w != u && w != v && oracle.adjacent(&pu, &pw) && oracle.adjacent(&pv, &pw)
                    })
                {
                    own.insert(BTreeSet::from([u, v]));
                }
            }
        }
        let g = build_bt_graph(n).expect("n >= 2");
        let lib: BTreeSet<BTreeSet<(usize, usize, usize)>> = g
            .maximal_two_cliques()
            .into_iter()
            .map(|(u, v)| BTreeSet::from([g.label(u).triple(), g.label(v).triple()]))
            .collect();
        let ok = own.len() == n + 1 && own == em_closed_forms(n) && lib == own;
        pass &= ok;
        parts.push(format!("n={n} {} maximal 2-cliques", lib.len()));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_8() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for n in 5..=8 {
        let oracle = Oracle::new(n);
        let v: BTreeSet<(usize, usize, usize)> = em_closed_forms(n).into_iter().flatten().collect();
        let size_ok = v.len() == 2 * (n + 1);
        let degrees: BTreeSet<usize> = v
            .iter()
            .map(|&a| v.iter().filter(|&&b| a != b && oracle.adjacent(&oracle.of(a), &oracle.of(b))).count())
            .collect();
        let start = *v.iter().next().unwrap();
        let mut orbit = BTreeSet::new();
        let mut stab = 0;
        let mut invariant = true;
        let mut free = true;
        for r in 0..=n {
            for refl in [false, true] {
                for &c in &v {
                    let img = oracle.decode.get(&dihedral_right(&oracle.of(c), r, refl)).copied();
                    invariant &= img.is_some_and(|x| v.contains(&x));
                    if (r, refl) != (0, false) && img == Some(c) {
                        free = false;
                    }
                }
                let img = oracle.decode[&dihedral_right(&oracle.of(start), r, refl)];
                orbit.insert(img);
                if img == start {
                    stab += 1;
                }
            }
        }
        let cycle = hamiltonian_cycle_v(n).expect("n >= 5");
        let cyc: Vec<(usize, usize, usize)> = cycle.iter().map(Cuts::triple).collect();
        let visits: BTreeSet<_> = cyc.iter().copied().collect();
        let steps_ok = (0..cyc.len()).all(|t| {
            oracle.adjacent(&oracle.of(cyc[t]), &oracle.of(cyc[(t + 1) % cyc.len()]))
        });
        let ham_ok = cyc.len() == v.len() && visits == v && steps_ok;
        let ok = size_ok
            && degrees == BTreeSet::from([3])
            && invariant
            && orbit.len() == v.len()
            && stab == 1
            && free
            && ham_ok;
        pass &= ok;
        parts.push(format!(
            "n={n} |V|={} degrees {degrees:?} orbit {} stab {stab} cycle {}",
            v.len(),
            orbit.len(),
            if ham_ok { "ok" } else { "bad" }
        ));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_9() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for n in 4..=8 {
        let report = check_theorem_aut_bt(n, AutOptions::default());
        // every right-invariant element, evaluated by the oracle, preserves adjacency
        let oracle = Oracle::new(n);
        let all = triples(n);
        let mut preserved = true;
        for r in 0..=n {
            for refl in [false, true] {
                let map = |c: (usize, usize, usize)| dihedral_right(&oracle.of(c), r, refl);
                for (a, &u) in all.iter().enumerate() {
                    for &v in &all[a + 1..] {
                        let before = oracle.adjacent(&oracle.of(u), &oracle.of(v));
                        preserved &= before == oracle.adjacent(&map(u), &map(v));
                    }
                }
            }
        }
        let ok = report.as_ref().is_ok_and(|r| r.all_pass()) && preserved;
        pass &= ok;
        let order = report
            .ok()
            .and_then(|r| r.checks.first().map(|c| c.got.clone()))
            .unwrap_or_default();
        parts.push(format!("n={n} |Aut|={order}"));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_10() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for n in 4..=6 {
        match check_n_trivial(n, 6) {
            Ok(out) => {
                let ok = out.report.all_pass()
                    && out.pointwise_order == 1
                    && out.identity_stabilizer_order == 2 * (n as u128 + 1);
                pass &= ok;
                parts.push(format!(
                    "n={n} |N|={} |stab(iota)|={}",
                    out.pointwise_order, out.identity_stabilizer_order
                ));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("n={n} error {e}"));
            }
        }
    }
    outcome(pass, parts.join("; "))
}

fn criterion_11() -> Outcome {
    let mut pass = true;
    let mut parts = vec![];
    for n in 3..=5 {
        match phi_check(n, 1000, 29) {
            Ok(r) => {
                pass &= r.all_pass();
                let pairs = r.checks.first().map(|c| c.got.clone()).unwrap_or_default();
                parts.push(format!("n={n} {pairs} pairs, {} failing", r.failures().count()));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("n={n} error {e}"));
            }
        }
    }
    outcome(pass, parts.join("; "))
}

fn bfs(n: usize) -> HashMap<Line, usize> {
    let oracle = Oracle::new(n);
    let id: Line = (1..=n).collect();
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for s in &oracle.tn {
            let y = compose(&x, s);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

fn criterion_12() -> Outcome {
    let opts = SortOptions::default();
    let mut bad = 0usize;
    let mut checked = 0usize;
    for n in 2..=5 {
        let oracle = bfs(n);
        let tn = Oracle::new(n).tn;
        for (line, &d) in &oracle {
            let p = Perm::from_one_line(line).expect("permutation");
            let lib = distance(&p, opts).expect("n <= 9");
            checked += 1;
            bad += usize::from(lib != d);
            bad += usize::from((d == 1) != tn.contains(line));
            bad += usize::from(oracle[&inverse(line)] != d);
            for r in 0..=n {
                for refl in [false, true] {
                    bad += usize::from(oracle[&dihedral_right(line, r, refl)] != d);
                    let q = if refl { g(line) } else { line.clone() };
                    bad += usize::from(oracle[&f(&q, r)] != d);
                }
            }
        }
    }
    outcome(bad == 0, format!("{checked} permutations for n<=5, {bad} violations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "size of T_n", Duration::from_secs(1), criterion_1),
        (2, "partition class sizes", Duration::from_secs(1), criterion_2),
        (3, "closed-form actions on cut points", Duration::from_secs(5), criterion_3),
        (4, "toric algebra identities", Duration::from_secs(10), criterion_4),
        (5, "regularity of the bt graph", Duration::from_secs(5), criterion_5),
        (6, "bipartite cross-degrees", Duration::from_secs(5), criterion_6),
        (7, "maximal 2-cliques", Duration::from_secs(5), criterion_7),
        (8, "graph on V and its Hamiltonian cycle", Duration::from_secs(5), criterion_8),
        (9, "automorphism group of the bt graph", Duration::from_secs(60), criterion_9),
        (10, "N-triviality on Cay", Duration::from_secs(600), criterion_10),
        (11, "Phi isomorphism", Duration::from_secs(30), criterion_11),
        (12, "distance oracle", Duration::from_secs(10), criterion_12),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let t = Instant::now();
        let out = run();
        let elapsed = t.elapsed();
        let pass = out.pass && elapsed <= budget;
        failed += usize::from(!pass);
        println!(
            "CRITERION {id:>2} {} {name} [{:.3}s / {}s] {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            out.detail
        );
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
