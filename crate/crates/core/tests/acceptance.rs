//! Acceptance suite: one test per numbered criterion, each printing a
//! pass/fail line. Criterion 9's command-line half lives in the cli
//! crate's acceptance test.
//!
//! Run with `cargo test --test acceptance -- --nocapture`.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use catalan_core::alpha::alpha;
use catalan_core::beta::{beta, beta_inv, check_beta_rules};
use catalan_core::classical::{
    arcs_to_planar, binary_to_tiling, induced, planar_to_arcs, tiling_to_binary,
};
use catalan_core::codec::{
    parse_arcs, parse_binary, parse_planar, parse_term, parse_tiling, parse_tree,
};
use catalan_core::terms::{
    decompose, eval, for_each_term, random_term, step, term_of, Decomposed,
};
use catalan_core::verify::{
    brute_force_binaries, brute_force_family, brute_force_planars, brute_force_rectangulations,
    brute_force_tilings, catalan, WORKED_EXAMPLE_TERM,
};
use catalan_core::{
    ArcTree, BinaryTree, Family, PlanarTree, Rect, RightSweptTree, Shape, StaircaseTiling, Term,
};

fn cat(n: usize) -> u64 {
    catalan(n).unwrap()
}

fn shapes_of(n: usize) -> (Vec<RightSweptTree>, Vec<StaircaseTiling>, Vec<ArcTree>) {
    let mut trees = Vec::new();
    let mut tilings = Vec::new();
    let mut arcs = Vec::new();
    for_each_term(n, &mut |term| {
        trees.push(eval(&term).unwrap());
        tilings.push(eval(&term).unwrap());
        arcs.push(eval(&term).unwrap());
    });
    (trees, tilings, arcs)
}

fn alpha_dyn(shape: &Shape, to: Family) -> Shape {
    match (shape, to) {
        (Shape::Tree(x), Family::Tree) => Shape::Tree(alpha(x).unwrap()),
        (Shape::Tree(x), Family::Tiling) => Shape::Tiling(alpha(x).unwrap()),
        (Shape::Tree(x), Family::Arcs) => Shape::Arcs(alpha(x).unwrap()),
        (Shape::Tiling(x), Family::Tree) => Shape::Tree(alpha(x).unwrap()),
        (Shape::Tiling(x), Family::Tiling) => Shape::Tiling(alpha(x).unwrap()),
        (Shape::Tiling(x), Family::Arcs) => Shape::Arcs(alpha(x).unwrap()),
        (Shape::Arcs(x), Family::Tree) => Shape::Tree(alpha(x).unwrap()),
        (Shape::Arcs(x), Family::Tiling) => Shape::Tiling(alpha(x).unwrap()),
        (Shape::Arcs(x), Family::Arcs) => Shape::Arcs(alpha(x).unwrap()),
        _ => panic!("alpha is defined on T, S, A"),
    }
}

#[test]
fn criterion_01_counts() {
    assert_eq!(cat(0), 1);
    let pinned = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for (n, &want) in pinned.iter().enumerate() {
        assert_eq!(cat(n), want, "catalan({n})");
    }
    for n in 0..=12 {
        let mut trees = HashSet::new();
        let mut tilings = HashSet::new();
        let mut arcs = HashSet::new();
        for_each_term(n, &mut |term| {
            let t: RightSweptTree = eval(&term).unwrap();
            let s: StaircaseTiling = eval(&term).unwrap();
            let a: ArcTree = eval(&term).unwrap();
            assert!(t.validate().is_empty());
            assert!(s.validate().is_empty());
            assert!(a.validate().is_empty());
            trees.insert(t);
            tilings.insert(s);
            arcs.insert(a);
        });
        for (family, count) in [("T", trees.len()), ("S", tilings.len()), ("A", arcs.len())] {
            assert_eq!(count as u64, cat(n), "family {family} at n={n}");
        }
    }
    println!("criterion 1 (counts, n <= 12): PASS");
}

#[test]
fn criterion_02_class_counts() {
    use catalan_core::terms::OpKind;
    for size in 1..=13usize {
        let n = size - 1;
        let mut tally = [0u64; 4];
        for_each_term(size, &mut |t| match t.root_op().unwrap() {
            OpKind::Mid => tally[0] += 1,
            OpKind::Right => tally[1] += 1,
            OpKind::Left => tally[2] += 1,
            OpKind::Fork => tally[3] += 1,
        });
        assert_eq!(tally[0], cat(n), "middle class at size {size}");
        assert_eq!(tally[1], if n >= 1 { cat(n) } else { 0 }, "right class at size {size}");
        assert_eq!(
            tally[2],
            if n >= 2 { cat(n) - cat(n - 1) } else { 0 },
            "left class at size {size}"
        );
        let want_f: u64 = if n >= 3 {
            (2..n).map(|k| cat(n - k) * (cat(k) - cat(k - 1))).sum()
        } else {
            0
        };
        assert_eq!(tally[3], want_f, "fork class at size {size}");
        assert_eq!(tally.iter().sum::<u64>(), cat(size), "total at size {size}");
    }
    for n in 1..=12usize {
        let lhs: u64 = (1..n).map(|k| cat(k) * cat(n - k)).sum();
        assert_eq!(lhs, cat(n + 1) - 2 * cat(n), "Segner identity at n={n}");
    }
    println!("criterion 2 (class counts and the Segner identity): PASS");
}

#[test]
fn criterion_03_alpha_bijections() {
    let families = [Family::Tree, Family::Tiling, Family::Arcs];
    for n in 0..=10usize {
        let (trees, tilings, arcs) = shapes_of(n);
        let pool: Vec<Vec<Shape>> = vec![
            trees.iter().cloned().map(Shape::Tree).collect(),
            tilings.iter().cloned().map(Shape::Tiling).collect(),
            arcs.iter().cloned().map(Shape::Arcs).collect(),
        ];
        let sets: Vec<HashSet<Shape>> =
            pool.iter().map(|v| v.iter().cloned().collect()).collect();
        for (i, _) in families.iter().enumerate() {
            for (j, &to) in families.iter().enumerate() {
                let mut images = HashSet::new();
                for x in &pool[i] {
                    let y = alpha_dyn(x, to);
                    assert_eq!(y.size(), n);
                    assert!(y.validate().is_empty());
                    assert_eq!(&alpha_dyn(&y, families[i]), x, "inverse at n={n}");
                    images.insert(y);
                }
                assert_eq!(images, sets[j], "bijection {i}->{j} at n={n}");
            }
        }
        // Functoriality across all 27 ordered triples.
        if n <= 7 {
            for x in pool.iter().flatten() {
                for &mid in &families {
                    for &end in &families {
                        let direct = alpha_dyn(x, end);
                        let composed = alpha_dyn(&alpha_dyn(x, mid), end);
                        assert_eq!(direct, composed, "triple via {mid:?} to {end:?}");
                    }
                }
            }
        } else {
            // Term equality implies every composition agrees.
            for t in &trees {
                let term = term_of(t).unwrap();
                let s: StaircaseTiling = eval(&term).unwrap();
                let a: ArcTree = eval(&term).unwrap();
                assert_eq!(term_of(&s).unwrap(), term);
                assert_eq!(term_of(&a).unwrap(), term);
            }
        }
        // Alpha commutes with every constructor application.
        for t in &trees {
            if t.size() == 0 {
                continue;
            }
            let lhs: StaircaseTiling = alpha(t).unwrap();
            let mapped = match decompose(t).unwrap() {
                Decomposed::Mid(c) => Decomposed::Mid(alpha(&c).unwrap()),
                Decomposed::Right(c) => Decomposed::Right(alpha(&c).unwrap()),
                Decomposed::Left(c) => Decomposed::Left(alpha(&c).unwrap()),
                Decomposed::Fork { free, bound } => Decomposed::Fork {
                    free: alpha(&free).unwrap(),
                    bound: alpha(&bound).unwrap(),
                },
            };
            assert_eq!(step::<StaircaseTiling>(mapped).unwrap(), lhs, "commute at n={n}");
        }
    }
    // A thousand seeded random terms at n = 12.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let term = random_term(12, &mut rng);
        let t: RightSweptTree = eval(&term).unwrap();
        let s: StaircaseTiling = eval(&term).unwrap();
        let a: ArcTree = eval(&term).unwrap();
        assert_eq!(alpha::<RightSweptTree, StaircaseTiling>(&t).unwrap(), s);
        assert_eq!(alpha::<StaircaseTiling, ArcTree>(&s).unwrap(), a);
        assert_eq!(alpha::<ArcTree, RightSweptTree>(&a).unwrap(), t);
        assert_eq!(term_of(&a).unwrap(), term);
    }
    println!("criterion 3 (alpha bijective, functorial, step-commuting): PASS");
}

#[test]
fn criterion_04_oracle_equivalence() {
    for family in [Family::Tree, Family::Tiling, Family::Arcs] {
        for n in 0..=8usize {
            let oracle: HashSet<Shape> = brute_force_family(family, n).into_iter().collect();
            let mut constructed = HashSet::new();
            for_each_term(n, &mut |term| {
                constructed.insert(match family {
                    Family::Tree => Shape::Tree(eval(&term).unwrap()),
                    Family::Tiling => Shape::Tiling(eval(&term).unwrap()),
                    Family::Arcs => Shape::Arcs(eval(&term).unwrap()),
                    _ => unreachable!(),
                });
            });
            assert_eq!(constructed, oracle, "family {family} at n={n}");
        }
    }
    println!("criterion 4 (constructor enumeration equals brute force, n <= 8): PASS");
}

#[test]
fn criterion_05_beta_inverse() {
    for n in 0..=12usize {
        for_each_term(n, &mut |term| {
            let t: RightSweptTree = eval(&term).unwrap();
            let s = beta(&t).unwrap();
            assert!(s.validate().is_empty());
            assert_eq!(beta_inv(&s).unwrap(), t);

            let s0: StaircaseTiling = eval(&term).unwrap();
            let t0 = beta_inv(&s0).unwrap();
            assert!(t0.validate().is_empty(), "beta_inv output is right-swept");
            assert_eq!(beta(&t0).unwrap(), s0);
        });
    }
    for n in 0..=8usize {
        for_each_term(n, &mut |term| {
            let t: RightSweptTree = eval(&term).unwrap();
            let s = beta(&t).unwrap();
            assert_eq!(check_beta_rules(&t, &s), Vec::<String>::new(), "{t}");
        });
    }
    println!("criterion 5 (beta and beta_inv mutually inverse, rules hold): PASS");
}

#[test]
fn criterion_06_alpha_beta_comparison() {
    for n in 0..=2usize {
        for_each_term(n, &mut |term| {
            let t: RightSweptTree = eval(&term).unwrap();
            let via_alpha: StaircaseTiling = alpha(&t).unwrap();
            assert_eq!(beta(&t).unwrap(), via_alpha, "n={n}");
        });
    }
    let mut agree = 0;
    let mut differ = Vec::new();
    for_each_term(3, &mut |term| {
        let t: RightSweptTree = eval(&term).unwrap();
        let a: StaircaseTiling = alpha(&t).unwrap();
        let b = beta(&t).unwrap();
        if a == b {
            agree += 1;
        } else {
            differ.push((a, b));
        }
    });
    assert_eq!(agree, 3);
    assert_eq!(differ.len(), 2);
    assert_eq!(differ[0].0, differ[1].1);
    assert_eq!(differ[0].1, differ[1].0);
    println!("criterion 6 (beta = alpha for n <= 2; exactly two images swapped at n = 3): PASS");
}

#[test]
fn criterion_07_worked_example() {
    let term = parse_term(WORKED_EXAMPLE_TERM).unwrap();
    let s: StaircaseTiling = eval(&term).unwrap();
    assert_eq!(s.size(), 12);
    assert!(s.validate().is_empty());
    assert_eq!(term_of(&s).unwrap().to_string(), WORKED_EXAMPLE_TERM);

    let t: RightSweptTree = alpha(&s).unwrap();
    let a: ArcTree = alpha(&s).unwrap();
    assert_eq!(t.size(), 12);
    assert_eq!(a.size(), 12);
    assert_eq!(term_of(&t).unwrap(), term);
    assert_eq!(term_of(&a).unwrap(), term);
    println!("criterion 7 (size-12 worked example round-trips byte-exactly): PASS");
}

#[test]
fn criterion_08_classical_bijections() {
    for n in 0..=12usize {
        let mut binaries = HashSet::new();
        let mut planars = HashSet::new();
        for_each_term(n, &mut |term| {
            let s: StaircaseTiling = eval(&term).unwrap();
            let b = tiling_to_binary(&s).unwrap();
            assert_eq!(b.size(), n);
            assert_eq!(binary_to_tiling(&b), s);
            binaries.insert(b);

            let a: ArcTree = eval(&term).unwrap();
            let p = arcs_to_planar(&a).unwrap();
            assert_eq!(p.size(), n);
            assert_eq!(planar_to_arcs(&p), a);
            planars.insert(p);
        });
        assert_eq!(binaries.len() as u64, cat(n));
        assert_eq!(planars.len() as u64, cat(n));
        if n <= 8 {
            let all_b: HashSet<BinaryTree> = brute_force_binaries(n).into_iter().collect();
            let all_p: HashSet<PlanarTree> = brute_force_planars(n).into_iter().collect();
            assert_eq!(binaries, all_b);
            assert_eq!(planars, all_p);
        }
    }
    for n in 0..=10usize {
        let mut images = HashSet::new();
        for_each_term(n, &mut |term| {
            let s: StaircaseTiling = eval(&term).unwrap();
            let b = tiling_to_binary(&s).unwrap();
            let p = induced(&Shape::Binary(b.clone()), Family::Planar).unwrap();
            assert_eq!(p.size(), n);
            assert_eq!(induced(&p, Family::Binary).unwrap(), Shape::Binary(b));
            images.insert(p);
        });
        assert_eq!(images.len() as u64, cat(n), "induced at n={n}");
    }
    println!("criterion 8 (classical and induced bijections exact): PASS");
}

#[test]
fn criterion_09_codec_round_trips() {
    for n in 0..=10usize {
        for_each_term(n, &mut |term| {
            assert_eq!(parse_term(&term.to_string()).unwrap(), term);
            let t: RightSweptTree = eval(&term).unwrap();
            let s: StaircaseTiling = eval(&term).unwrap();
            let a: ArcTree = eval(&term).unwrap();
            let b = tiling_to_binary(&s).unwrap();
            let p = arcs_to_planar(&a).unwrap();
            assert_eq!(parse_tree(&t.to_string()).unwrap(), t);
            assert_eq!(parse_tiling(&s.to_string()).unwrap(), s);
            assert_eq!(parse_arcs(&a.to_string()).unwrap(), a);
            assert_eq!(parse_binary(&b.to_string()).unwrap(), b);
            assert_eq!(parse_planar(&p.to_string()).unwrap(), p);
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..10_000usize {
        let term = random_term(i % 17, &mut rng);
        assert_eq!(parse_term(&term.to_string()).unwrap(), term);
    }
    println!("criterion 9 (codec round-trips; cli half in catalan-cli tests): PASS");
}

#[test]
fn criterion_10_rectangulation_equivalence() {
    use std::collections::BTreeSet;
    for n in 0..=6u32 {
        let general: BTreeSet<Vec<Rect>> =
            brute_force_rectangulations(n).into_iter().collect();
        let diagonal: BTreeSet<Vec<Rect>> = brute_force_tilings(n)
            .into_iter()
            .map(|t| {
                let mut rects = t.rects().to_vec();
                rects.sort_unstable_by_key(|r| (r.r1, r.c1));
                rects
            })
            .collect();
        assert_eq!(general, diagonal, "n={n}");
    }
    println!("criterion 10 (n-rectangle tilings are exactly the diagonal tilings, n <= 6): PASS");
}

// The fork term in the acceptance literal has the free component first;
// this pins the slot order the criteria rely on.
#[test]
fn fork_slot_order_matches_the_worked_example() {
    let term = parse_term("f(m(E),r(m(E)))").unwrap();
    assert_eq!(term, Term::fork(Term::mid(Term::E), Term::right(Term::mid(Term::E))));
    assert!(parse_term("f(r(m(E)),m(E))").is_err());
}
