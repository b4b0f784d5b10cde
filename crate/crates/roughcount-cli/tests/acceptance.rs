//! Acceptance suite: one test (and one printed pass/fail line) per
//! criterion. Each criterion lists its sub-checks; a failing sub-check
//! fails the whole criterion and names itself in the printed line.

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use roughcount_core::countability::{self, PartialMethod};
use roughcount_core::counting::{self, CountToken, Method, OrderSpec};
use roughcount_core::fixtures;
use roughcount_core::granules;
use roughcount_core::measures::{self, ConsistencyParams};
use roughcount_core::perm::LexPermutations;
use roughcount_core::space::{ApproximationSpace, ElementSet, Relation, Universe};
use roughcount_core::{cipca, Rational};

struct Criterion {
    number: u32,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32) -> Self {
        Criterion { number, failures: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool) {
        if !ok {
            self.failures.push(label.to_owned());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("ACCEPTANCE {}: pass", self.number);
        } else {
            println!(
                "ACCEPTANCE {}: FAIL — {}",
                self.number,
                self.failures.join("; ")
            );
        }
        assert!(self.failures.is_empty(), "criterion {} failed", self.number);
    }
}

fn universe(n: usize) -> Universe {
    Universe::new((0..n).map(|i| format!("x{i}"))).unwrap()
}

fn equivalence_space(blocks: &[usize]) -> ApproximationSpace {
    let n = blocks.len();
    let pairs = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| blocks[i] == blocks[j]);
    ApproximationSpace::new(universe(n), Relation::new(n, pairs).unwrap()).unwrap()
}

fn random_blocks(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..n)).collect()
}

fn random_space(rng: &mut ChaCha8Rng, n: usize) -> ApproximationSpace {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(0.25) {
                pairs.push((i, j));
            }
        }
    }
    ApproximationSpace::new(universe(n), Relation::new(n, pairs).unwrap()).unwrap()
}

fn random_order(rng: &mut ChaCha8Rng, n: usize) -> OrderSpec {
    use rand::seq::SliceRandom;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    OrderSpec::new(idx).unwrap()
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> ElementSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// All set partitions of `0..n` as block-assignment vectors (restricted
/// growth strings).
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(s: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if s.len() == n {
            out.push(s.clone());
            return;
        }
        for b in 0..=max {
            s.push(b);
            rec(s, max.max(b + 1), n, out);
            s.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], 1, n, &mut out);
    out
}

fn rendered(tokens: &[CountToken]) -> Vec<String> {
    tokens.iter().map(CountToken::render).collect()
}

#[test]
fn criterion_1_paper_example_golden() {
    let start = Instant::now();
    let mut c = Criterion::new(1);
    let r = fixtures::paper_space_r();
    let q = fixtures::paper_space_q();
    let order = OrderSpec::canonical(12);

    let hppc = counting::hppc(&r, &order).unwrap();
    c.check(
        "R-HPPC row",
        hppc.rendered()
            == ["1_1", "2_1", "*", "*", "3_1", "*", "4_1", "5_1", "*", "*", "*", "*"],
    );
    let q_hpc = counting::hpc(&q, &order).unwrap();
    c.check(
        "Q-HPC row",
        q_hpc.rendered()
            == ["1_1", "2_1", "3_1", "1_2", "2_2", "1_3", "2_3", "3_3", "1_4", "1_5", "2_5", "1_6"],
    );

    let quotient: BTreeSet<ElementSet> = q.classes().unwrap().as_set();
    let expected_quotient: BTreeSet<ElementSet> = fixtures::sets(
        &q,
        &[&["a", "b"], &["c"], &["e", "f"], &["i", "k"], &["l", "m", "n"], &["g"], &["h"]],
    )
    .into_iter()
    .collect();
    c.check("S|Q partition", quotient == expected_quotient);

    let pos = measures::pos_region(&r, &q).unwrap();
    let printed_pos = r.universe().set_of(["e", "f", "l", "m", "n"]).unwrap();
    c.check("POS_R(Q) = {e,f,l,m,n}", pos == printed_pos);

    let induced = counting::induced(&q_hpc, &printed_pos);
    c.check(
        "induced Q-HPC",
        rendered(&induced) == ["1_1", "2_3", "1_4", "1_5", "1_6"],
    );
    c.check("runtime < 1 s", start.elapsed().as_secs_f64() < 1.0);
    c.finish();
}

#[test]
fn criterion_2_documented_errata() {
    let mut c = Criterion::new(2);
    let report = roughcount_cli::verify::verify_paper_example();
    let by_name = |name: &str| {
        report
            .rows
            .iter()
            .find(|r| r.name == name)
            .unwrap_or_else(|| panic!("row {name}"))
    };
    c.check(
        "R-IPC diverges exactly at 9-12",
        by_name("R-IPC").divergent_positions == [9, 10, 11, 12],
    );
    c.check(
        "R-HPC diverges exactly from 7",
        by_name("R-HPC").divergent_positions == [7, 8, 9, 10, 11, 12],
    );
    c.check("R-HPPC matches", by_name("R-HPPC").divergent_positions.is_empty());
    c.check("Q-HPC matches", by_name("Q-HPC").divergent_positions.is_empty());
    c.check("induced matches", report.induced.divergent_positions.is_empty());
    c.finish();
}

#[test]
fn criterion_3_measure_identities() {
    let mut c = Criterion::new(3);
    let r = fixtures::paper_space_r();
    let q = fixtures::paper_space_q();
    c.check(
        "delta(Q,R) = 5/12",
        measures::delta(&r, &q).unwrap() == Rational::new(5, 12),
    );
    c.check(
        "delta(R,Q) = 1",
        measures::delta(&q, &r).unwrap() == Rational::new(1, 1),
    );
    let p2 = ConsistencyParams::new(Rational::new(2, 1)).unwrap();
    c.check(
        "Cons(Q,R;n=2) = 9/16",
        measures::cons(&q, &r, p2).unwrap() == Rational::new(9, 16),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut gk_ok = true;
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let a = equivalence_space(&random_blocks(&mut rng, n));
        let b = equivalence_space(&random_blocks(&mut rng, n));
        gk_ok &= measures::gk(&a, &b).unwrap().sum() == measures::delta(&a, &b).unwrap();
    }
    c.check("sum gk = delta on 200 random pairs", gk_ok);

    let mut gcons_ok = true;
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let a = equivalence_space(&random_blocks(&mut rng, n));
        let b = equivalence_space(&random_blocks(&mut rng, n));
        for k in [0, 1, 2, 5] {
            let p = ConsistencyParams::new(Rational::new(k, 1)).unwrap();
            gcons_ok &=
                measures::gcons(&a, &b, p).unwrap().sum() == measures::cons(&a, &b, p).unwrap();
        }
    }
    c.check("sum gcons = cons for n in {0,1,2,5} on 100 random pairs", gcons_ok);
    c.finish();
}

#[test]
fn criterion_4_inclusion_functions() {
    let mut c = Criterion::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut sum_ok = true;
    let mut uniform_ok = true;
    let mut definite_ok = true;
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let s = equivalence_space(&random_blocks(&mut rng, n));
        let x = random_subset(&mut rng, n);
        let y = random_subset(&mut rng, n);
        let v = measures::k_star(&s, &x, &y).unwrap();
        let lower_x = s.lower(&x).unwrap();
        let r = s.classes().unwrap().len();
        if lower_x.is_empty() {
            // uniform branch, exactly here
            uniform_ok &= v.values().iter().all(|&u| u == Rational::new(1, r as i64));
        } else {
            let meet: ElementSet = x.intersection(&y).copied().collect();
            let expected = Rational::new(
                s.lower(&meet).unwrap().len() as i64,
                lower_x.len() as i64,
            );
            sum_ok &= v.sum() == expected;
            uniform_ok &= !(r > 1 && v.values().iter().all(|&u| u == Rational::new(1, r as i64)))
                || v.sum() == expected;
        }
        // definite X and X ∩ Y built as unions of classes
        let blocks = s.classes().unwrap();
        let dx: ElementSet = blocks
            .blocks()
            .iter()
            .filter(|_| rng.gen_bool(0.6))
            .flatten()
            .copied()
            .collect();
        let dy: ElementSet = blocks
            .blocks()
            .iter()
            .filter(|_| rng.gen_bool(0.6))
            .flatten()
            .copied()
            .collect();
        if !dx.is_empty() {
            let v = measures::k_star(&s, &dx, &dy).unwrap();
            definite_ok &= v.sum() == measures::k(&dx, &dy);
        }
    }
    c.check("sum k_star = |lower(X∩Y)|/|lower(X)| on 500 triples", sum_ok);
    c.check("uniform branch exactly when lower(X) empty", uniform_ok);
    c.check("k_star = k on definite X, X∩Y", definite_ok);
    c.finish();
}

#[test]
fn criterion_5_granule_theorems() {
    let mut c = Criterion::new(5);
    // exhaustive: every order of every equivalence, n <= 6
    let mut hpc_ok = true;
    for n in 1..=6 {
        for assignment in set_partitions(n) {
            let s = equivalence_space(&assignment);
            let classes = s.classes().unwrap().as_set();
            for p in LexPermutations::new(n) {
                let order = OrderSpec::new(p).unwrap();
                let seq = counting::hpc(&s, &order).unwrap();
                let got = granules::granules_from_hpc(&seq, &s).unwrap();
                hpc_ok &= got.blocks.as_set() == classes;
            }
        }
    }
    c.check("granules_from_hpc ∘ hpc = classes, exhaustive n <= 6", hpc_ok);

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut random_ok = true;
    for _ in 0..1000 {
        let s = equivalence_space(&random_blocks(&mut rng, 8));
        let order = random_order(&mut rng, 8);
        let seq = counting::hpc(&s, &order).unwrap();
        let got = granules::granules_from_hpc(&seq, &s).unwrap();
        random_ok &= got.blocks.as_set() == s.classes().unwrap().as_set();
    }
    c.check("granules_from_hpc, 1000 random cases n = 8", random_ok);

    let mut maximal_ok = true;
    for n in 1..=5 {
        for assignment in set_partitions(n) {
            let s = equivalence_space(&assignment);
            let got = granules::maximal_ipc_granules(&s, 5).unwrap();
            maximal_ok &= got.blocks.as_set() == s.classes().unwrap().as_set();
        }
    }
    c.check("maximal_ipc_granules = classes, all equivalences n <= 5", maximal_ok);

    // a single IPC count on the example's R splits classes
    let r = fixtures::paper_space_r();
    let seq = counting::ipc(&r, &OrderSpec::canonical(12)).unwrap();
    c.check(
        "IPC negative witness on R",
        granules::split_ipc(&seq).as_set() != r.classes().unwrap().as_set(),
    );
    c.finish();
}

#[test]
fn criterion_6_countability() {
    let mut c = Criterion::new(6);
    let three = ApproximationSpace::new(
        universe(3),
        Relation::new(3, [(0, 1), (1, 0)]).unwrap(),
    )
    .unwrap();
    c.check(
        "IPPC index 1/3 on sym{(a,b)}",
        countability::index_exact(&three, PartialMethod::Ippc, 6)
            .unwrap()
            .value
            .as_rational()
            == Rational::new(1, 3),
    );

    // HPPC index ∈ {0,1}: all equivalences n <= 6, plus 200 random
    // relations per n, each by full n! enumeration, cross-checked
    // against the no-off-diagonal-pair characterization
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut hppc_ok = true;
    let check_space = |s: &ApproximationSpace, ok: &mut bool| {
        let idx = countability::index_exact(s, PartialMethod::Hppc, 6)
            .unwrap()
            .value
            .as_rational();
        let zero_or_one = idx == Rational::new(0, 1) || idx == Rational::new(1, 1);
        let n = s.len();
        let offdiag = (0..n).any(|i| (i + 1..n).any(|j| s.related(i, j)));
        *ok &= zero_or_one && (idx == Rational::new(1, 1)) == !offdiag;
    };
    for n in 1..=6 {
        for assignment in set_partitions(n) {
            check_space(&equivalence_space(&assignment), &mut hppc_ok);
        }
        for _ in 0..200 {
            check_space(&random_space(&mut rng, n), &mut hppc_ok);
        }
    }
    c.check("HPPC index in {0,1}, n <= 6", hppc_ok);

    let mut mc_ok = true;
    for seed in 0..20u64 {
        let n = rng.gen_range(2..=6);
        let s = random_space(&mut rng, n);
        let exact = countability::index_exact(&s, PartialMethod::Ippc, 6).unwrap();
        let est = countability::index_estimate(&s, PartialMethod::Ippc, 10_000, seed);
        let diff = est.value.as_rational() - exact.value.as_rational();
        mc_ok &= diff.abs() <= Rational::new(1, 20);
    }
    c.check("Monte Carlo within 0.05 of exact, 20 spaces", mc_ok);
    c.finish();
}

#[test]
fn criterion_7_cipca() {
    let mut c = Criterion::new(7);
    let mut degenerate_ok = true;
    for n in 1..=5 {
        let diag = ApproximationSpace::new(
            universe(n),
            Relation::new(n, (0..n).map(|i| (i, i))).unwrap(),
        )
        .unwrap();
        let complete = ApproximationSpace::new(
            universe(n),
            Relation::new(n, (0..n).flat_map(|i| (0..n).map(move |j| (i, j)))).unwrap(),
        )
        .unwrap();
        degenerate_ok &= cipca::quotient(&diag, 5).unwrap().len() == 1;
        degenerate_ok &= cipca::quotient(&complete, 5).unwrap().len() == 1;
    }
    c.check("1 class for diagonal and complete, n <= 5", degenerate_ok);

    let pair = ApproximationSpace::new(
        universe(3),
        Relation::new(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)]).unwrap(),
    )
    .unwrap();
    c.check("3 classes for n = 3 sym{(a,b)}", cipca::quotient(&pair, 5).unwrap().len() == 3);

    // ⊙ well-definedness for every class pair: whenever the table has an
    // entry, every member product lands in that class
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut odot_ok = true;
    let mut spaces: Vec<ApproximationSpace> = (1..=5).map(|n| random_space(&mut rng, n)).collect();
    spaces.push(pair.clone());
    for s in &spaces {
        let q = cipca::quotient(s, 5).unwrap();
        let table = q.op_table();
        for (a, row) in table.iter().enumerate() {
            for (b, entry) in row.iter().enumerate() {
                let mut products: BTreeSet<usize> = BTreeSet::new();
                for x in &q.classes()[a].members {
                    for y in &q.classes()[b].members {
                        products
                            .insert(q.class_of(&roughcount_core::perm::compose(x, y)).unwrap());
                    }
                }
                odot_ok &= match entry {
                    Some(t) => products.len() == 1 && products.contains(t),
                    None => products.len() > 1,
                };
            }
        }
    }
    c.check("odot defined iff all member products agree, n <= 5", odot_ok);

    // relabeling invariance at the quotient level: identical multiset of
    // (signature, class size) under 50 random conjugations
    let mut relabel_ok = true;
    for _ in 0..50 {
        use rand::seq::SliceRandom;
        let n = rng.gen_range(1..=5);
        let s = random_space(&mut rng, n);
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(&mut rng);
        let conj: Vec<(usize, usize)> = s
            .relation()
            .pairs()
            .iter()
            .map(|&(a, b)| (sigma[a], sigma[b]))
            .collect();
        let s2 = ApproximationSpace::new(universe(n), Relation::new(n, conj).unwrap()).unwrap();
        let summary = |sp: &ApproximationSpace| {
            let mut v: Vec<(Vec<CountToken>, usize)> = cipca::quotient(sp, 5)
                .unwrap()
                .classes()
                .iter()
                .map(|cl| (cl.signature.clone(), cl.members.len()))
                .collect();
            v.sort();
            v
        };
        relabel_ok &= summary(&s) == summary(&s2);
    }
    c.check("quotient invariant under 50 random conjugations", relabel_ok);

    let start = Instant::now();
    let s5 = random_space(&mut rng, 5);
    let _ = cipca::quotient(&s5, 5).unwrap().op_table();
    c.check("full n = 5 table build < 10 s", start.elapsed().as_secs_f64() < 10.0);
    c.finish();
}

#[test]
fn criterion_8_token_invariants() {
    let mut c = Criterion::new(8);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut total_ok = true;
    let mut partial_ok = true;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let s = random_space(&mut rng, n);
        let order = random_order(&mut rng, n);
        for method in [Method::Ipc, Method::Hpc] {
            let toks: Vec<(u32, u32)> = counting::count(&s, &order, method)
                .unwrap()
                .tokens()
                .iter()
                .map(|t| match t {
                    CountToken::Defined { alpha, two_type } => (*alpha, *two_type),
                    CountToken::Undefined => unreachable!("total methods"),
                })
                .collect();
            for w in toks.windows(2) {
                total_ok &= w[1].1 == w[0].1 || w[1].1 == w[0].1 + 1;
            }
            for i in 0..toks.len() {
                for j in i + 1..toks.len() {
                    if toks[i].1 == toks[j].1 {
                        total_ok &= toks[j].0 as usize == toks[i].0 as usize + (j - i);
                    }
                }
            }
        }
        let hppc = counting::hppc(&s, &order).unwrap();
        let ippc = counting::ippc(&s, &order).unwrap();
        for (h, i) in hppc.tokens().iter().zip(ippc.tokens()) {
            partial_ok &= !h.is_defined() || i.is_defined();
        }
        for seq in [&hppc, &ippc] {
            let mut expected = 1u32;
            for t in seq.tokens() {
                if let CountToken::Defined { alpha, two_type } = t {
                    partial_ok &= *alpha == expected && *two_type == 1;
                    expected += 1;
                }
            }
        }
    }
    c.check("beta unit steps and within-type arithmetic, 10^4 draws", total_ok);
    c.check("HPPC ⊆ IPPC defined and values 1,2,3,..., 10^4 draws", partial_ok);
    c.finish();
}
