//! Acceptance suite. One test per criterion; each prints a PASS or FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//! All comparisons are exact; randomized criteria use fixed seeds.

use std::collections::HashMap;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use assert_cmd::Command;
use farey_sl2::apeirogon::dual_path;
use farey_sl2::frieze::{
    antiperiodic_tiling, frieze_from_closed_path, quiddity, quiddity_realizable, SignPeriod,
};
use farey_sl2::limits::{classify_tail_limit, Direction, LimitClass, QuadraticIrrational};
use farey_sl2::polygon::{enumerate_triangulations, TriangulatedPolygon};
use farey_sl2::tiling::{
    frieze_phi, ones_structure, phi, phi_raw, psi, unique_min, PathPair, TilingWindow,
};
use farey_sl2::words::is_cycle_sequence;
use farey_sl2::{ExtRational, FareyPath, ItinerarySpec, Lift, Mat2};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn criterion(n: usize, desc: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("[PASS] criterion {n}: {desc}"),
        Err(cause) => {
            println!("[FAIL] criterion {n}: {desc}");
            resume_unwind(cause);
        }
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn word(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn path_from(formula: impl Fn(i64) -> (i64, i64), lo: i64, hi: i64) -> FareyPath {
    let lifts = (lo..=hi)
        .map(|i| {
            let (a, b) = formula(i);
            Lift::new(a, b)
        })
        .collect();
    FareyPath::from_lifts(lifts, lo).unwrap()
}

fn fib(n: i64) -> i64 {
    let (mut a, mut b) = (0i64, 1i64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn random_word(rng: &mut ChaCha8Rng, len: std::ops::RangeInclusive<usize>) -> Vec<i64> {
    let n = rng.random_range(len);
    (0..n).map(|_| rng.random_range(-3..=3)).collect()
}

fn random_spec(rng: &mut ChaCha8Rng) -> ItinerarySpec {
    ItinerarySpec::periodic(
        &random_word(rng, 1..=3),
        &random_word(rng, 0..=4),
        &random_word(rng, 1..=3),
    )
}

#[test]
fn criterion_01_heptagon_frieze_and_triangle_counts() {
    criterion(
        1,
        "heptagon quiddity reproduces the frieze array and the triangle counts",
        || {
            let expected = "\
0 0 0 0 0 0 0
 1 1 1 1 1 1 1
1 2 2 3 1 2 4
 1 3 5 2 1 7 3
1 7 3 1 3 5 2
 2 4 1 2 2 3 1
1 1 1 1 1 1 1
 0 0 0 0 0 0 0
";
            Command::cargo_bin("farey-sl2")
                .unwrap()
                .env("FAREY_SL2_COLOR", "0")
                .args([
                    "frieze",
                    "--quiddity",
                    "1,2,2,3,1,2,4",
                    "--format",
                    "standard-form",
                ])
                .assert()
                .success()
                .stdout(expected);

            let poly =
                TriangulatedPolygon::from_diagonals(7, &[(1, 6), (2, 6), (3, 6), (3, 5)]).unwrap();
            assert_eq!(poly.triangle_counts(), word(&[1, 2, 2, 3, 1, 2, 4]));
        },
    );
}

#[test]
fn criterion_02_golden_windows_and_unique_min() {
    criterion(
        2,
        "pair windows match their closed forms, with a unique smallest entry",
        || {
            let sign = |i: i64| if i.rem_euclid(2) == 0 { 1 } else { -1 };
            let pair = PathPair {
                gamma: path_from(|i| (sign(i) * i, sign(i)), -4, 4),
                delta: path_from(|j| (-j, j.abs() + 1), -4, 4),
            };
            let w = phi(&pair, (-3, 3), (-3, 3)).unwrap();
            for i in -3i64..=3 {
                for j in -3i64..=3 {
                    let m = sign(i) * (i * (j.abs() + 1) + j);
                    assert_eq!(
                        w.entry(i, j).unwrap(),
                        &big(m),
                        "alternating, at ({i}, {j})"
                    );
                }
            }

            let pair = PathPair {
                gamma: path_from(
                    |i| {
                        if i >= 0 {
                            (i + 1, 2 * i + 1)
                        } else {
                            (-2 * i + 1, -i + 1)
                        }
                    },
                    -4,
                    4,
                ),
                delta: path_from(
                    |j| {
                        if j >= 0 {
                            (-(2 * j + 1), j + 1)
                        } else {
                            (j - 1, -2 * j + 1)
                        }
                    },
                    -4,
                    4,
                ),
            };
            let w = phi(&pair, (-3, 3), (-3, 3)).unwrap();
            for i in -3i64..=3 {
                for j in -3i64..=3 {
                    let m = ((3 * i.abs() + 2) * (3 * j.abs() + 2) + i * j) / 2;
                    assert_eq!(w.entry(i, j).unwrap(), &big(m), "positive, at ({i}, {j})");
                }
            }
            assert_eq!(w.entry(0, 0).unwrap(), &big(2));
            assert_eq!(unique_min(&w).unwrap(), (big(2), vec![(0, 0)]));

            let pair = PathPair {
                gamma: path_from(|i| (i.abs() + 1, i), -4, 4),
                delta: path_from(|j| (-j, j.abs() + 1), -4, 4),
            };
            let w = phi(&pair, (-3, 3), (-3, 3)).unwrap();
            for i in -3i64..=3 {
                for j in -3i64..=3 {
                    let m = (i.abs() + 1) * (j.abs() + 1) + i * j;
                    assert_eq!(w.entry(i, j).unwrap(), &big(m), "fan, at ({i}, {j})");
                }
            }
            assert_eq!(w.entry(0, 0).unwrap(), &big(1));
            assert_eq!(unique_min(&w).unwrap(), (big(1), vec![(0, 0)]));
        },
    );
}

#[test]
fn criterion_03_roundtrip_on_random_pairs() {
    criterion(
        3,
        "100 random pairs: fill is tame SL2, recovery up to one common element",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(101);
            for case in 0..100 {
                let pair = PathPair {
                    gamma: random_spec(&mut rng).realize(-5, 6).unwrap(),
                    delta: random_spec(&mut rng).realize(-5, 6).unwrap(),
                };
                let w = phi(&pair, (-3, 4), (-3, 4)).unwrap();
                assert!(w.is_sl2().unwrap() && w.is_tame().unwrap(), "case {case}");

                let back = psi(&w).unwrap();
                assert_eq!(phi_raw(&back, (-3, 4), (-3, 4)).unwrap(), w, "case {case}");
                let neg = w.neg();
                let back_neg = psi(&neg).unwrap();
                assert_eq!(
                    phi_raw(&back_neg, (-3, 4), (-3, 4)).unwrap(),
                    neg,
                    "case {case}"
                );

                let seed_of = |p: &FareyPath| {
                    let l = p.lift_at(-3).unwrap();
                    let m = p.lift_at(-2).unwrap();
                    Mat2::from_columns(&l.a, &l.b, &m.a, &m.b).unwrap()
                };
                let g = seed_of(&back.gamma).mul(&seed_of(&pair.gamma).inverse());
                assert!(g.det().is_one(), "case {case}");
                let moved = pair.gamma.slice(-3, 4).unwrap().transformed(&g);
                assert_eq!(moved.vertices(), back.gamma.vertices(), "case {case}");
                let moved = pair.delta.slice(-3, 4).unwrap().transformed(&g);
                assert_eq!(moved.vertices(), back.delta.vertices(), "case {case}");
            }
        },
    );
}

#[test]
fn criterion_04_quiddity_of_path_friezes_is_the_itinerary() {
    criterion(
        4,
        "quiddity of a path's frieze window equals the path's itinerary",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(202);
            for case in 0..100 {
                let gamma = random_spec(&mut rng).realize(0, 19).unwrap();
                let w = frieze_phi(&gamma, (0, 19), (0, 19)).unwrap();
                assert_eq!(
                    quiddity(&w).unwrap(),
                    gamma.itinerary().unwrap(),
                    "case {case}"
                );
            }

            // The oscillating Fibonacci walk, whose quiddity alternates signs.
            let s = |i: i64| [-1, -1, 1, 1][i.rem_euclid(4) as usize];
            let lift = |i: i64| {
                let m = i.abs();
                (
                    if i < 0 { -s(m) } else { s(m) } * fib(m),
                    -s(m) * fib(m + 1),
                )
            };
            let gamma = path_from(lift, -6, 6);
            let w = frieze_phi(&gamma, (-6, 6), (-6, 6)).unwrap();
            assert_eq!(
                quiddity(&w).unwrap(),
                (-5, word(&[-1, 1, -1, 1, -1, 2, -1, 1, -1, 1, -1]))
            );
        },
    );
}

#[test]
fn criterion_05_cycle_sequences_and_realizability() {
    criterion(
        5,
        "triangle counts minus last term are cycle sequences; window realizability",
        || {
            for n in 3..=9usize {
                for diagonals in enumerate_triangulations(n) {
                    let poly = TriangulatedPolygon::from_diagonals(n, &diagonals).unwrap();
                    let counts = poly.triangle_counts();
                    assert!(
                        is_cycle_sequence(&counts[..n - 1]),
                        "triangulation {diagonals:?} of the {n}-gon"
                    );
                }
            }
            assert!(!quiddity_realizable(&word(&[8, 8, 1, 2, 2, 3, 1, 2, 8, 8])).unwrap());
            for all_ge_two in [
                &[2, 2, 2, 2, 2, 2][..],
                &[3, 2, 4, 2, 2],
                &[2],
                &[5, 7, 2, 3],
            ] {
                assert!(
                    quiddity_realizable(&word(all_ge_two)).unwrap(),
                    "{all_ge_two:?}"
                );
            }
        },
    );
}

#[test]
fn criterion_06_order_six_tame_frieze() {
    criterion(
        6,
        "itinerary period [1,1,-1,1,1,3] gives the periodic order-6 frieze",
        || {
            let period = word(&[1, 1, -1, 1, 1, 3]);
            let path = ItinerarySpec::realize_closed(&period).unwrap();
            assert_eq!(path.period_sign().unwrap(), 1);

            let f = frieze_from_closed_path(&path, 6, (-1, 13), (-1, 13)).unwrap();
            assert_eq!(f.sign_period(), SignPeriod::Periodic);
            let block = [
                [0, -1, -3, -2, 1, 1],
                [1, 0, -1, -1, 0, 1],
                [3, 1, 0, -1, -1, 2],
                [2, 1, 1, 0, -1, 1],
                [-1, 0, 1, 1, 0, -1],
                [-1, -1, -2, -1, 1, 0],
            ];
            for i in -1i64..=13 {
                for j in -1i64..=13 {
                    let m = block[(i + 1).rem_euclid(6) as usize][(j + 1).rem_euclid(6) as usize];
                    assert_eq!(f.entry(i, j).unwrap(), big(m), "at ({i}, {j})");
                }
            }

            assert_eq!(f.quiddity_cycle().unwrap(), period);
            let mut rotated = f.quiddity_cycle().unwrap();
            rotated.rotate_right(1);
            assert_eq!(rotated, word(&[3, 1, 1, -1, 1, 1]));
        },
    );
}

#[test]
fn criterion_07_counts_equal_farey_distance() {
    criterion(
        7,
        "triangle-count propagation equals the Farey distance on random polygons",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(303);
            let mut pool: HashMap<usize, Vec<Vec<(usize, usize)>>> = HashMap::new();
            for _ in 0..50 {
                let n = rng.random_range(4..=12usize);
                let all = pool.entry(n).or_insert_with(|| enumerate_triangulations(n));
                let pick = rng.random_range(0..all.len());
                let poly = TriangulatedPolygon::from_diagonals(n, &all[pick]).unwrap();
                let vs = poly.vertices();
                for u in 0..n {
                    let counts = poly.cc_count(u).unwrap();
                    for v in 0..n {
                        assert_eq!(counts[v], vs[u].delta(&vs[v]), "n = {n}, u = {u}, v = {v}");
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_08_cassini_ones_and_tail_limits() {
    criterion(
        8,
        "Fibonacci path: unit antidiagonal and golden-ratio tail limits",
        || {
            let golden = path_from(
                |i| {
                    if i > 0 {
                        (-fib(2 * i - 1), -fib(2 * i))
                    } else {
                        (fib(-2 * i), fib(-2 * i + 1))
                    }
                },
                -17,
                17,
            );
            let w = frieze_phi(&golden, (-16, 16), (-16, 16)).unwrap();
            for i in 1..=15i64 {
                assert_eq!(w.entry(i, -i).unwrap(), &big(1), "antidiagonal at {i}");
            }
            let galois = LimitClass::QuadraticIrrational(QuadraticIrrational {
                p: big(-1),
                q: big(1),
                d: big(5),
                r: big(2),
            });
            let period = word(&[3]);
            for dir in [Direction::Backward, Direction::Forward] {
                let got = classify_tail_limit(&golden, &period, dir).unwrap();
                assert_eq!(got, galois);
                assert_eq!(got.to_string(), "(-1 + 1*sqrt(5)) / 2");
            }

            let fan = path_from(|i| (-i, i.abs() + 1), -9, 9);
            let period = word(&[2]);
            let back = classify_tail_limit(&fan, &period, Direction::Backward).unwrap();
            let fwd = classify_tail_limit(&fan, &period, Direction::Forward).unwrap();
            assert_eq!(back, LimitClass::Rational(ExtRational::from_integer(1)));
            assert_eq!(fwd, LimitClass::Rational(ExtRational::from_integer(-1)));
        },
    );
}

#[test]
fn criterion_09_antiperiodic_windows_of_disjoint_cycles() {
    criterion(
        9,
        "disjoint closed pairs give antiperiodic windows with a positive block",
        || {
            // Squeezes the standard polygon realization into the arc (-2, -1),
            // keeping it disjoint from any polygon realized at {0, inf, positives}.
            let squeeze = Mat2::from_columns(&big(-1), &big(1), &big(-2), &big(1)).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(404);
            let mut pool: HashMap<usize, Vec<Vec<(usize, usize)>>> = HashMap::new();
            let cycle_path =
                |rng: &mut ChaCha8Rng,
                 n: usize,
                 pool: &mut HashMap<usize, Vec<Vec<(usize, usize)>>>| {
                    let all = pool.entry(n).or_insert_with(|| enumerate_triangulations(n));
                    let pick = rng.random_range(0..all.len());
                    let poly = TriangulatedPolygon::from_diagonals(n, &all[pick]).unwrap();
                    let mut vs = poly.vertices().to_vec();
                    vs.rotate_left(rng.random_range(0..n));
                    vs.push(vs[0].clone());
                    FareyPath::lift(&vs, 0).unwrap()
                };
            for case in 0..20 {
                let r = rng.random_range(3..=5usize);
                let s = rng.random_range(3..=5usize);
                let gamma = cycle_path(&mut rng, r, &mut pool);
                let delta = cycle_path(&mut rng, s, &mut pool).transformed(&squeeze);
                let (r, s) = (r as i64, s as i64);
                let w = antiperiodic_tiling(&gamma, &delta, (0, 2 * r), (0, 2 * s)).unwrap();
                assert!(w.is_sl2().unwrap(), "case {case}");
                for i in 0..=r {
                    for j in 0..=2 * s {
                        assert_eq!(
                            *w.entry(i + r, j).unwrap(),
                            -w.entry(i, j).unwrap(),
                            "case {case}"
                        );
                    }
                }
                for i in 0..=2 * r {
                    for j in 0..=s {
                        assert_eq!(
                            *w.entry(i, j + s).unwrap(),
                            -w.entry(i, j).unwrap(),
                            "case {case}"
                        );
                    }
                }
                for i in 1..=r {
                    for j in 1..=s {
                        assert!(
                            w.entry(i, j).unwrap().is_positive(),
                            "case {case} at ({i}, {j})"
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_10_dual_windows() {
    criterion(
        10,
        "dual paths of the fan and golden windows are certified exactly",
        || {
            let fan = path_from(|i| (-i, i.abs() + 1), -5, 5);
            let want: Vec<ExtRational> = ["-1", "inf", "1"]
                .iter()
                .map(|s| s.parse().unwrap())
                .collect();
            assert_eq!(dual_path(&fan).unwrap().vertices(), want);

            let golden = path_from(
                |i| {
                    if i > 0 {
                        (-fib(2 * i), fib(2 * i + 1))
                    } else {
                        (fib(-2 * i), fib(-2 * i + 1))
                    }
                },
                -3,
                3,
            );
            let want: Vec<ExtRational> = ["-5/8", "-2/3", "-1", "inf", "1", "2/3", "5/8"]
                .iter()
                .map(|s| s.parse().unwrap())
                .collect();
            assert_eq!(dual_path(&golden).unwrap().vertices(), want);
        },
    );
}

#[test]
fn criterion_11_staircase_of_ones() {
    criterion(
        11,
        "ones in a positive window form a staircase; violations are rejected",
        || {
            let golden = path_from(
                |i| {
                    if i > 0 {
                        (-fib(2 * i), fib(2 * i + 1))
                    } else {
                        (fib(-2 * i), fib(-2 * i + 1))
                    }
                },
                -3,
                3,
            );
            let dual = dual_path(&golden).unwrap();
            let pair = PathPair {
                gamma: golden,
                delta: dual,
            };
            let w = phi(&pair, (-3, 3), (0, 6)).unwrap();
            assert!(w.rows().iter().flatten().all(|x| x.is_positive()));

            let ones = ones_structure(&w).unwrap();
            let brute: Vec<(i64, i64)> = (-3..=3)
                .flat_map(|i| (0..=6).map(move |j| (i, j)))
                .filter(|&(i, j)| w.entry(i, j).unwrap().is_one())
                .collect();
            assert_eq!(ones, brute);
            assert_eq!(
                ones,
                vec![
                    (-3, 6),
                    (-2, 5),
                    (-2, 6),
                    (-1, 4),
                    (-1, 5),
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (1, 1),
                    (1, 2),
                    (2, 0),
                    (2, 1),
                    (3, 0),
                ]
            );
            for (a, one) in ones.iter().enumerate() {
                for other in &ones[a + 1..] {
                    assert!(
                        !(one.0 < other.0 && one.1 < other.1)
                            && !(other.0 < one.0 && other.1 < one.1),
                        "{one:?} dominates {other:?}"
                    );
                }
            }

            let pair = PathPair {
                gamma: path_from(|i| (i.abs() + 1, i), -4, 4),
                delta: path_from(|j| (-j, j.abs() + 1), -4, 4),
            };
            let w = phi(&pair, (-3, 3), (-3, 3)).unwrap();
            assert_eq!(ones_structure(&w).unwrap(), vec![(0, 0)]);

            // A window with 1 at (0,0) and at (1,1) violates the staircase.
            let bad = TilingWindow::from_i64_rows(0, 0, &[vec![1, 2], vec![2, 1]]).unwrap();
            assert!(ones_structure(&bad).is_err());
        },
    );
}
