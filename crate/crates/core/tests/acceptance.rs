//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails or overruns its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use redei_berge::combinatorics::{factorial, permutations, PermutationView};
use redei_berge::deformation::{deformed_u_definition, deformed_u_thm, TMatrix};
use redei_berge::digraph::{
    enumerate_digraphs, enumerate_tournaments, random_digraph_with, random_tournament_with, Digraph,
};
use redei_berge::hamiltonian::{count_hamps, count_nontrivial_odd_cycles};
use redei_berge::lemmas::{
    count_friendly_listings, count_listings_containing, count_perms_containing, find_path_cover_by_search,
    friendly_product_formula, is_linear, level_signed_sum, polya_sum, signed_linear_sum, signed_subset_sum,
    signed_sum_per_perm, ArcSet, PathCover,
};
use redei_berge::limits::Limits;
use redei_berge::poly::{PPolynomial, Rational};
use redei_berge::redei::{u_p_thm1, u_p_thm2, u_p_thm3, u_via_definition};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn(&Limits) -> Outcome,
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn p(parts: &[usize]) -> PPolynomial {
    PPolynomial::p_of(parts)
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())
}

fn random_tmatrix(rng: &mut ChaCha8Rng, n: usize) -> TMatrix {
    let mut t = TMatrix::zero(n);
    for u in 0..n {
        for v in 0..n {
            t.set(u, v, random_rational(rng));
        }
    }
    t
}

fn golden_values(limits: &Limits) -> Outcome {
    let cases = [
        (
            "complement example",
            Digraph::from_one_based(3, &[(1, 2), (2, 2), (3, 3)]).unwrap(),
            &p(&[1, 1, 1]) + &(&p(&[2, 1]).scale(&int(2)) + &p(&[3])),
        ),
        (
            "three-vertex digraph with p1^3 - p2 p1 + p3",
            Digraph::from_one_based(3, &[(1, 3), (2, 1), (3, 1), (3, 2)]).unwrap(),
            &(&p(&[1, 1, 1]) - &p(&[2, 1])) + &p(&[3]),
        ),
        (
            "four-vertex digraph with p1^4 + p2 p1^2 + p3 p1",
            Digraph::from_one_based(4, &[(1, 2), (2, 1), (2, 3), (2, 4), (3, 4)]).unwrap(),
            &(&p(&[1, 1, 1, 1]) + &p(&[2, 1, 1])) + &p(&[3, 1]),
        ),
    ];
    for (name, d, expected) in &cases {
        let got = u_p_thm1(d, limits).map_err(|e| e.to_string())?;
        ensure(&got == expected, || format!("{name}: got {got}, expected {expected}"))?;
    }
    Ok(format!("{} digraphs", cases.len()))
}

fn theorem_one(limits: &Limits) -> Outcome {
    let check = |d: &Digraph| -> Result<(), String> {
        let vars = d.n().max(1);
        let lhs = u_p_thm1(d, limits)
            .and_then(|f| f.expand(vars))
            .map_err(|e| e.to_string())?;
        let rhs = u_via_definition(d, vars, limits).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("mismatch on {d}"))
    };
    let mut count = 0;
    for d in enumerate_digraphs(3, true, limits).unwrap() {
        check(&d)?;
        count += 1;
    }
    ensure(count == 512, || format!("enumerated {count} digraphs on 3 vertices"))?;
    let mut r = rng(1);
    for _ in 0..200 {
        let n = r.gen_range(1..=5);
        check(&random_digraph_with(&mut r, n, 0.5, true))?;
    }
    Ok("512 exhaustive n=3 + 200 random n<=5".into())
}

fn theorems_two_and_three(limits: &Limits) -> Outcome {
    let mut counts = Vec::new();
    for n in [4, 5] {
        let mut count = 0;
        for t in enumerate_tournaments(n, limits).unwrap() {
            let one = u_p_thm1(&t, limits).map_err(|e| e.to_string())?;
            let two = u_p_thm2(&t, limits).map_err(|e| e.to_string())?;
            let three = u_p_thm3(&t, limits).map_err(|e| e.to_string())?;
            ensure(one == two && two == three, || {
                format!("routes differ on {t}: {one} / {two} / {three}")
            })?;
            ensure(two.in_odd_power_sum_semiring(), || {
                format!("{two} outside N[p1,2p3,2p5,...] for {t}")
            })?;
            count += 1;
        }
        counts.push(count);
    }
    ensure(counts == [64, 1024], || format!("tournament counts {counts:?}"))?;
    Ok("64 tournaments n=4 + 1024 tournaments n=5".into())
}

fn redei_and_mod4(limits: &Limits) -> Outcome {
    let check = |t: &Digraph| -> Result<(), String> {
        let hamps = count_hamps(t, limits).map_err(|e| e.to_string())?;
        let odd = count_nontrivial_odd_cycles(t, limits).map_err(|e| e.to_string())?;
        let h4 = (&hamps % 4u32).to_string();
        let rhs = (1 + 2 * (odd % 2)) % 4;
        ensure(&hamps % 2u32 == BigUint::one(), || {
            format!("{hamps} hamps (even) on {t}")
        })?;
        ensure(h4 == rhs.to_string(), || {
            format!("{hamps} hamps, {odd} odd cycles on {t}")
        })
    };
    let mut count = 0;
    for n in 0..=5 {
        for t in enumerate_tournaments(n, limits).unwrap() {
            check(&t)?;
            count += 1;
        }
    }
    let mut r = rng(4);
    for _ in 0..50 {
        check(&random_tournament_with(&mut r, 8))?;
    }
    Ok(format!("{count} exhaustive n<=5 + 50 random n=8"))
}

fn berge(limits: &Limits) -> Outcome {
    let check = |d: &Digraph| -> Result<(), String> {
        let a = count_hamps(d, limits).map_err(|e| e.to_string())?;
        let b = count_hamps(&d.complement(), limits).map_err(|e| e.to_string())?;
        ensure(&a % 2u32 == &b % 2u32, || format!("{a} vs {b} hamps on {d}"))
    };
    for d in enumerate_digraphs(3, true, limits).unwrap() {
        check(&d)?;
    }
    let mut r = rng(5);
    for _ in 0..200 {
        let n = r.gen_range(1..=7);
        check(&random_digraph_with(&mut r, n, 0.5, true))?;
    }
    Ok("512 exhaustive n=3 + 200 random n<=7".into())
}

fn zeta_bridge(limits: &Limits) -> Outcome {
    let mut count = 0;
    for d in enumerate_digraphs(4, true, limits).unwrap() {
        let zeta = u_p_thm1(&d, limits).map_err(|e| e.to_string())?.zeta();
        let hamps = count_hamps(&d.complement(), limits).map_err(|e| e.to_string())?;
        ensure(zeta == Rational::from_integer(hamps.clone().into()), || {
            format!("zeta {zeta} vs {hamps} on {d}")
        })?;
        count += 1;
    }
    ensure(count == 65536, || format!("enumerated {count}"))?;
    Ok("65536 digraphs n=4".into())
}

fn omega_and_antipode(limits: &Limits) -> Outcome {
    let check = |d: &Digraph| -> Result<(), String> {
        let u = u_p_thm1(d, limits).map_err(|e| e.to_string())?;
        let u_bar = u_p_thm1(&d.complement(), limits).map_err(|e| e.to_string())?;
        let sign = int(if d.n().is_multiple_of(2) { 1 } else { -1 });
        ensure(u.omega() == u_bar, || format!("omega fails on {d}"))?;
        ensure(u.antipode() == u_bar.scale(&sign), || format!("antipode fails on {d}"))
    };
    for d in enumerate_digraphs(3, true, limits).unwrap() {
        check(&d)?;
    }
    let mut r = rng(7);
    for _ in 0..100 {
        let n = r.gen_range(1..=5);
        check(&random_digraph_with(&mut r, n, 0.5, true))?;
    }
    Ok("512 exhaustive n=3 + 100 random n<=5".into())
}

/// `p1^2 + (t12 + t21 + 1) p2`.
fn closed_form_two(t: &TMatrix) -> PPolynomial {
    let c = t.t(0, 1) + t.t(1, 0) + int(1);
    &p(&[1, 1]) + &p(&[2]).scale(&c)
}

/// `p1^3 + (Σt + 3) p2 p1 + (t12t23 + t23t31 + t31t12 + t13t32 + t32t21 + t21t13 + Σt + 2) p3`,
/// with Σt over the six off-diagonal pairs.
fn closed_form_three(t: &TMatrix) -> PPolynomial {
    let x = |u: usize, v: usize| t.t(u - 1, v - 1).clone();
    let sum = x(1, 2) + x(2, 1) + x(1, 3) + x(3, 1) + x(2, 3) + x(3, 2);
    let products = x(1, 2) * x(2, 3)
        + x(2, 3) * x(3, 1)
        + x(3, 1) * x(1, 2)
        + x(1, 3) * x(3, 2)
        + x(3, 2) * x(2, 1)
        + x(2, 1) * x(1, 3);
    let mut f = p(&[1, 1, 1]);
    f = &f + &p(&[2, 1]).scale(&(sum.clone() + int(3)));
    &f + &p(&[3]).scale(&(products + sum + int(2)))
}

fn deformation(limits: &Limits) -> Outcome {
    let mut r = rng(8);
    for (n, closed) in [
        (2, closed_form_two as fn(&TMatrix) -> PPolynomial),
        (3, closed_form_three),
    ] {
        for _ in 0..5 {
            let t = random_tmatrix(&mut r, n);
            let got = deformed_u_thm(&t, limits).map_err(|e| e.to_string())?;
            let expected = closed(&t);
            ensure(got == expected, || {
                format!("n={n}, t={}: {got} vs {expected}", t.to_json())
            })?;
            let by_definition = deformed_u_definition(&t, n, limits).map_err(|e| e.to_string())?;
            ensure(expected.expand(n).unwrap() == by_definition, || {
                format!("definition differs at {}", t.to_json())
            })?;
        }
    }
    for _ in 0..100 {
        let n = r.gen_range(1..=4);
        let d = random_digraph_with(&mut r, n, 0.5, true);
        let got = deformed_u_thm(&TMatrix::from_digraph(&d), limits).map_err(|e| e.to_string())?;
        let expected = u_p_thm1(&d, limits).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("indicator specialization fails on {d}"))?;
    }
    // each t_a enters every coefficient with degree at most 1, so the
    // second difference along any single coordinate vanishes
    let mut pairs = 0;
    for _ in 0..10 {
        let n = r.gen_range(2..=4);
        let base = random_tmatrix(&mut r, n);
        let h = random_rational(&mut r) + int(10);
        for u in 0..n {
            for v in 0..n {
                let shifted = |delta: Rational| {
                    let mut t = base.clone();
                    t.set(u, v, base.t(u, v) + delta);
                    deformed_u_thm(&t, limits).unwrap()
                };
                let second = &(&shifted(h.clone()) - &shifted(Rational::zero()).scale(&int(2))) + &shifted(-h.clone());
                ensure(second.is_zero(), || {
                    format!("second difference {second} along ({u},{v}) at {}", base.to_json())
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "closed forms n=2,3 at 5 samples each, 100 specializations, {pairs} second differences"
    ))
}

fn random_arc_set(r: &mut ChaCha8Rng, n: usize, max_size: usize) -> ArcSet {
    let size = r.gen_range(0..=max_size);
    ArcSet::new(n, (0..size).map(|_| (r.gen_range(0..n), r.gen_range(0..n)))).unwrap()
}

fn random_path_cover(r: &mut ChaCha8Rng, n: usize) -> PathCover {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, r.gen_range(0..=i));
    }
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match paths.last_mut() {
            Some(path) if r.gen_bool(0.5) => path.push(v),
            _ => paths.push(vec![v]),
        }
    }
    PathCover::new(n, paths).unwrap()
}

fn lemma_suite(limits: &Limits) -> Outcome {
    let mut r = rng(9);
    let err = |e: redei_berge::error::Error| e.to_string();

    for size in 0..=12 {
        let got = signed_subset_sum(size, limits).map_err(err)?;
        ensure(got == i64::from(size == 0), || {
            format!("cancellation sum {got} for |B|={size}")
        })?;
    }

    for _ in 0..500 {
        let n = r.gen_range(1..=6);
        let f = random_arc_set(&mut r, n, 8);
        let searched = find_path_cover_by_search(&f, limits).map_err(err)?.is_some();
        ensure(is_linear(&f) == searched, || {
            format!("linearity criteria disagree on {f:?}")
        })?;
    }

    let example = ArcSet::new(8, [(0, 3), (3, 2), (1, 7), (6, 5)]).unwrap();
    let listings = count_listings_containing(&example, limits).map_err(err)?;
    let perms = count_perms_containing(&example);
    ensure(listings == BigUint::from(24u8) && perms == BigUint::from(24u8), || {
        format!("example cover counts {listings} listings, {perms} permutations")
    })?;
    for _ in 0..100 {
        let n = r.gen_range(1..=7);
        let cover = random_path_cover(&mut r, n);
        let arcs = cover.arcs(n);
        let expected = BigUint::from(factorial(cover.len()));
        let listings = count_listings_containing(&arcs, limits).map_err(err)?;
        let brute_perms = permutations(n).filter(|s| arcs.pairs().all(|(u, v)| s[u] == v)).count();
        ensure(listings == expected, || {
            format!("{listings} listings contain {cover:?}")
        })?;
        ensure(
            count_perms_containing(&arcs) == expected && BigUint::from(brute_perms) == expected,
            || format!("{brute_perms} permutations contain {cover:?}"),
        )?;
    }

    for d in enumerate_digraphs(3, true, limits).unwrap() {
        let hamps = BigInt::from(count_hamps(&d.complement(), limits).map_err(err)?);
        ensure(signed_linear_sum(&d, limits).map_err(err)? == hamps, || {
            format!("linear-subset sum on {d}")
        })?;

        let mut rebuilt = PPolynomial::zero();
        for images in permutations(3) {
            let sigma = PermutationView::new(images).map_err(err)?;
            let c = signed_sum_per_perm(&d, &sigma, limits).map_err(err)?;
            rebuilt.add_term(sigma.cycle_type(), int(c));
        }
        ensure(rebuilt == u_p_thm1(&d, limits).map_err(err)?, || {
            format!("per-permutation rebuild on {d}")
        })?;
    }

    for _ in 0..20 {
        let n = r.gen_range(1..=5);
        let d = random_digraph_with(&mut r, n, 0.5, true);
        let max_level = r.gen_range(1..=3);
        let levels: Vec<usize> = (0..n).map(|_| r.gen_range(1..=max_level)).collect();
        let direct = count_friendly_listings(&d, &levels, limits).map_err(err)?;
        let product = friendly_product_formula(&d, &levels, limits).map_err(err)?;
        let signed = level_signed_sum(&d, &levels, limits).map_err(err)?;
        ensure(direct == product && BigInt::from(direct.clone()) == signed, || {
            format!("friendly listings {direct} / {product} / {signed} for levels {levels:?} on {d}")
        })?;
    }

    let mut polya = 0;
    for images in permutations(4) {
        let sigma = PermutationView::new(images).map_err(err)?;
        for m in 1..=4 {
            let got = polya_sum(&sigma, m, limits).map_err(err)?;
            let expected = PPolynomial::p(sigma.cycle_type()).expand(m).map_err(err)?;
            ensure(got == expected, || {
                format!("Polya sum for {:?} in {m} variables", sigma.images())
            })?;
            polya += 1;
        }
    }
    Ok(format!(
        "cancellation, 500 linearity samples, 101 cover counts, 512 n=3 sums, 20 level maps, {polya} Polya sums"
    ))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "golden values",
            budget: Duration::from_secs(1),
            run: golden_values,
        },
        Criterion {
            id: 2,
            name: "signed cycle expansion vs definition",
            budget: Duration::from_secs(60),
            run: theorem_one,
        },
        Criterion {
            id: 3,
            name: "tournament routes and odd power-sum semiring",
            budget: Duration::from_secs(60),
            run: theorems_two_and_three,
        },
        Criterion {
            id: 4,
            name: "Redei parity and mod-4 refinement",
            budget: Duration::from_secs(120),
            run: redei_and_mod4,
        },
        Criterion {
            id: 5,
            name: "Berge parity",
            budget: Duration::from_secs(60),
            run: berge,
        },
        Criterion {
            id: 6,
            name: "zeta bridge",
            budget: Duration::from_secs(120),
            run: zeta_bridge,
        },
        Criterion {
            id: 7,
            name: "omega and antipode",
            budget: Duration::from_secs(30),
            run: omega_and_antipode,
        },
        Criterion {
            id: 8,
            name: "deformation",
            budget: Duration::from_secs(60),
            run: deformation,
        },
        Criterion {
            id: 9,
            name: "lemma oracles",
            budget: Duration::from_secs(120),
            run: lemma_suite,
        },
    ];
    let limits = Limits::default();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)(&limits);
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(summary) if elapsed > c.budget => Err(format!("{summary}; took {elapsed:.2?}, budget {:?}", c.budget)),
            other => other,
        };
        match outcome {
            Ok(summary) => println!("PASS [{}] {} ({summary}; {elapsed:.2?})", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {} ({detail}; {elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
