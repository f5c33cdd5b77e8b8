//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p zic-secrecy --test acceptance`.

use std::process::ExitCode;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use zic_secrecy::correspondence::correspondence_report;
use zic_secrecy::det_channel::DetParams;
use zic_secrecy::det_regions::det_outer_region;
use zic_secrecy::det_schemes::{
    corner_scheme_a, corner_scheme_b, entropy, evaluate_scheme, mutual_information, Assignment, JointDist,
    Transmitter,
};
use zic_secrecy::gauss_regions::{
    best_outer_region, secrecy_r2_objective, thm4_bounds, thm5_bounds, thm6_bounds, GaussParams,
};
use zic_secrecy::region_geom::{area, contains, is_subset, vertices, Constraint, RatePair, RateRegion};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn det(m: u32, n: u32, c: u32) -> DetParams {
    DetParams::new(m, n, c).unwrap()
}

fn gauss(snr: f64, inr: f64, cg: f64) -> GaussParams {
    GaussParams::new(snr, inr, cg).unwrap()
}

fn pts(v: &[(f64, f64)]) -> Vec<RatePair> {
    v.iter().map(|&(a, b)| RatePair::new(a, b)).collect()
}

fn det_region_corners() -> Outcome {
    for c in 0..=3u32 {
        let region = det_outer_region(&det(5, 3, c));
        let v = vertices(&region);
        let cf = f64::from(c);
        let expected = if c < 3 {
            pts(&[
                (0.0, 0.0),
                (5.0, 0.0),
                (5.0, 2.0 + cf),
                (2.0 + cf, 5.0),
                (0.0, 5.0),
            ])
        } else {
            pts(&[(0.0, 0.0), (5.0, 0.0), (5.0, 5.0), (0.0, 5.0)])
        };
        ensure(v == expected, format!("C={c}: vertices {v:?}"))?;
    }
    ensure(
        area(&det_outer_region(&det(5, 3, 3))) == 25.0,
        "C=3 is not the full square",
    )?;
    Ok("(5,3), C=0..3 corners (5,2+C),(2+C,5); square at C=3".into())
}

fn det_region_high_interference() -> Outcome {
    let r = det_outer_region(&det(4, 5, 0));
    ensure(contains(&r, RatePair::new(4.0, 0.0)), "(4,0) excluded")?;
    ensure(!contains(&r, RatePair::new(4.0, 1e-6)), "(4,1e-6) included")?;
    ensure(contains(&r, RatePair::new(1.0, 3.0)), "(1,3) excluded")?;
    ensure(!contains(&r, RatePair::new(1.0 + 1e-6, 3.0)), "R2=3 admits R1>1")?;
    let sum1 = det_outer_region(&det(4, 5, 1))
        .constraints()
        .iter()
        .filter(|c| c.a1 == 1.0 && c.a2 == 1.0)
        .map(|c| c.b)
        .collect::<Vec<_>>();
    ensure(sum1 == vec![5.0], format!("C=1 sum bounds {sum1:?}"))?;
    Ok("(4,5): (4,0) in, (4,1e-6) out, R2=3 forces R1<=1, C=1 sum bound 5".into())
}

fn very_high_regime() -> Outcome {
    for c in 0..=5 {
        let r = det_outer_region(&det(2, 4, c));
        ensure(area(&r) == 0.0, format!("C={c}: area {}", area(&r)))?;
        ensure(
            contains(&r, RatePair::new(2.0, 0.0)),
            format!("C={c}: (2,0) excluded"),
        )?;
        ensure(
            !contains(&r, RatePair::new(0.0, 1e-6)),
            format!("C={c}: R2>0 admitted"),
        )?;
    }
    Ok("(2,4), C=0..5: region is R2<=0 with zero area".into())
}

fn corner_schemes_exact() -> Outcome {
    let mut count = 0;
    for m in 1..=8 {
        for n in 1..=m {
            let p = det(m, n, 0);
            let face = f64::from(2 * m - n);
            let region = det_outer_region(&p);
            for (scheme, rates) in [
                (corner_scheme_a(&p).unwrap(), (m, m - n)),
                (corner_scheme_b(&p).unwrap(), (m - n, m)),
            ] {
                let r = evaluate_scheme(&scheme).map_err(|e| e.to_string())?;
                ensure(r.leakage.is_exact_zero(), format!("{p}: leakage {:?}", r.leakage))?;
                ensure(r.decodable1 && r.decodable2, format!("{p}: not decodable"))?;
                ensure((r.r1, r.r2) == rates, format!("{p}: rates ({}, {})", r.r1, r.r2))?;
                let point = RatePair::new(f64::from(r.r1), f64::from(r.r2));
                ensure(contains(&region, point), format!("{p}: {point:?} outside region"))?;
                ensure(
                    point.r1 + point.r2 == face,
                    format!("{p}: {point:?} off the sum face"),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!(
        "{count} corner schemes with exact zero leakage on the sum face"
    ))
}

fn jamming_needed() -> Outcome {
    let p = det(5, 3, 0);
    let b = corner_scheme_b(&p).unwrap();
    let jams = b.jam_levels(Transmitter::Tx1);
    ensure(jams == vec![1, 2, 3], format!("jam levels {jams:?}"))?;
    let mut leaks = Vec::new();
    for level in jams {
        let s = b.replaced(Transmitter::Tx1, level, Assignment::Zero).unwrap();
        let leak = evaluate_scheme(&s).unwrap().leakage;
        let exact = leak.exact.clone().ok_or("leakage not exact")?;
        ensure(
            exact >= BigRational::one(),
            format!("level {level}: leakage {exact}"),
        )?;
        leaks.push(exact.to_string());
    }
    Ok(format!(
        "leakage without each jam level: {} bits",
        leaks.join(", ")
    ))
}

fn log_grid() -> Vec<f64> {
    (0..9).map(|k| 10f64.powf(f64::from(k) / 2.0)).collect()
}

fn gaussian_dominance() -> Outcome {
    let mut points = 0;
    for &snr in &log_grid() {
        for &inr in log_grid().iter().filter(|&&i| i <= snr) {
            for cg in [0.0, 1.0, 2.0] {
                let g = gauss(snr, inr, cg);
                let t4 = thm4_bounds(&g);
                let t5 = thm5_bounds(&g).map_err(|e| e.to_string())?;
                ensure(
                    t5.sum <= t4.sum + 1e-9,
                    format!("{g}: sum {} > {}", t5.sum, t4.sum),
                )?;
                ensure(t5.r2 <= t4.r2 + 1e-9, format!("{g}: r2 {} > {}", t5.r2, t4.r2))?;
                points += 1;
            }
        }
    }
    Ok(format!(
        "secrecy bound below cooperative bound at {points} points"
    ))
}

fn spot_values() -> Outcome {
    // 40-digit evaluations of the closed forms
    let g = gauss(100.0, 25.0, 0.0);
    let checks = [
        ("cooperative sum", thm4_bounds(&g).sum, 5.048_509_583_887_006),
        (
            "weak secrecy sum",
            thm5_bounds(&g).unwrap().sum,
            4.307_991_623_681_249,
        ),
        (
            "weak secrecy R2",
            thm5_bounds(&g).unwrap().r2,
            3.171_337_193_593_513,
        ),
        (
            "general secrecy sum",
            thm6_bounds(&g).unwrap().sum,
            4.863_781_713_148_461,
        ),
    ];
    for (name, got, want) in checks {
        ensure((got - want).abs() <= 1e-2, format!("{name}: {got} vs {want}"))?;
    }
    Ok(checks
        .iter()
        .map(|(name, got, _)| format!("{name} {got:.4}"))
        .collect::<Vec<_>>()
        .join(", "))
}

fn strong_interference_rho() -> Outcome {
    let g = gauss(100.0, 225.0, 1.0);
    let t4 = thm4_bounds(&g);
    let t6 = thm6_bounds(&g).unwrap();
    ensure(
        t6.sum < t4.sum,
        format!("general sum {} >= cooperative {}", t6.sum, t4.sum),
    )?;
    let rho = t6.r2_rho.ok_or("no maximizing rho")?.rho;
    ensure((t6.r2 - 2.760).abs() <= 5e-3, format!("R2 {}", t6.r2))?;
    ensure((rho + 0.673).abs() <= 1e-2, format!("rho* {rho}"))?;

    let (mut dense_rho, mut dense) = (-1.0, f64::NEG_INFINITY);
    for i in 0..=200_000 {
        let r = -1.0 + f64::from(i) * 1e-5;
        let v = secrecy_r2_objective(&g, r).unwrap();
        if v > dense {
            dense = v;
            dense_rho = r;
        }
    }
    ensure(
        t6.r2 >= dense - 1e-12,
        format!("dense grid beats search: {dense} > {}", t6.r2),
    )?;
    ensure(
        t6.r2 - dense <= 1e-8,
        format!("search {} far above dense grid {dense}", t6.r2),
    )?;
    ensure(
        (rho - dense_rho).abs() <= 1e-4,
        format!("rho {rho} vs dense {dense_rho}"),
    )?;
    Ok(format!(
        "R2 {:.4} at rho {:.4} (dense grid {:.4} at {:.4}); sum {:.4} < {:.4}",
        t6.r2, rho, dense, dense_rho, t6.sum, t4.sum
    ))
}

fn cooperation_monotone() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..20 {
        let (m, n) = (rng.gen_range(1..=12), rng.gen_range(0..=24));
        let mut prev = det_outer_region(&det(m, n, 0));
        for c in 1..=6 {
            let next = det_outer_region(&det(m, n, c));
            ensure(is_subset(&prev, &next), format!("det ({m},{n}) C={c}"))?;
            prev = next;
        }

        let snr = 10f64.powf(rng.gen_range(0.0..4.0));
        let inr = 10f64.powf(rng.gen_range(0.0..4.0));
        let mut cgs: Vec<f64> = (0..4).map(|_| rng.gen_range(0.0..3.0)).collect();
        cgs.insert(0, 0.0);
        cgs.sort_by(f64::total_cmp);
        let regions = cgs
            .iter()
            .map(|&cg| best_outer_region(&gauss(snr, inr, cg)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        for (w, cg) in regions.windows(2).zip(&cgs[1..]) {
            ensure(
                is_subset(&w[0], &w[1]),
                format!("gauss snr={snr} inr={inr} cg={cg}"),
            )?;
        }
    }
    Ok("20 deterministic and 20 Gaussian parameter sets nested in C".into())
}

fn high_snr_correspondence() -> Outcome {
    let weak = correspondence_report(&det(10, 6, 2)).unwrap();
    let high = correspondence_report(&det(6, 9, 0)).unwrap();
    let g =
        |r: &zic_secrecy::correspondence::GapReport, name: &str| r.gap(name).ok_or(format!("missing {name}"));
    ensure(g(&weak, "thm5_sum")? <= 0.01, "thm5_sum gap at (10,6,2)")?;
    ensure(g(&high, "thm6_r2")? <= 0.01, "thm6_r2 gap at (6,9,0)")?;
    ensure(g(&high, "thm6_sum")? <= 0.1, "thm6_sum gap at (6,9,0)")?;
    let mut worst: f64 = 0.0;
    for (r, names) in [
        (&weak, &["thm4_r1", "thm4_r2", "thm5_r2"][..]),
        (&high, &["thm6_r1", "thm6_r2"][..]),
    ] {
        for name in names {
            let gap = g(r, name)?;
            ensure(gap <= 0.01, format!("{name} gap {gap}"))?;
            worst = worst.max(gap);
        }
    }
    Ok(format!(
        "thm5_sum gap {:.2e}, thm6_sum gap {:.2e}, worst individual-rate gap {worst:.2e}",
        g(&weak, "thm5_sum")?,
        g(&high, "thm6_sum")?
    ))
}

// Independent geometry oracle: rasterize the feasible set and hull it.

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn hull(mut p: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    p.sort_by(|a, b| a.partial_cmp(b).unwrap());
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut h: Vec<(f64, f64)> = Vec::new();
    for pass in 0..2 {
        let start = h.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> = if pass == 0 {
            Box::new(p.iter())
        } else {
            Box::new(p.iter().rev())
        };
        for &q in iter {
            while h.len() >= start + 2 && cross(h[h.len() - 2], h[h.len() - 1], q) <= 0.0 {
                h.pop();
            }
            h.push(q);
        }
        h.pop();
    }
    h
}

fn polygon_area(p: &[(f64, f64)]) -> f64 {
    let n = p.len();
    (0..n)
        .map(|i| p[i].0 * p[(i + 1) % n].1 - p[(i + 1) % n].0 * p[i].1)
        .sum::<f64>()
        .abs()
        / 2.0
}

fn dist_to_segment(q: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((q.0 - a.0) * dx + (q.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    ((q.0 - a.0 - t * dx).powi(2) + (q.1 - a.1 - t * dy).powi(2)).sqrt()
}

fn dist_to_boundary(q: (f64, f64), poly: &[(f64, f64)]) -> f64 {
    (0..poly.len())
        .map(|i| dist_to_segment(q, poly[i], poly[(i + 1) % poly.len()]))
        .fold(f64::INFINITY, f64::min)
}

fn hausdorff(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let one =
        |x: &[(f64, f64)], y: &[(f64, f64)]| x.iter().map(|&q| dist_to_boundary(q, y)).fold(0.0, f64::max);
    one(a, b).max(one(b, a))
}

fn raster_hull(r: &RateRegion, step: f64) -> Vec<(f64, f64)> {
    let cells = (1.0 / step).round() as usize;
    let mut pts = Vec::new();
    for i in 0..=cells {
        let x = i as f64 * step;
        let mut top = None;
        for j in 0..=cells {
            let y = j as f64 * step;
            if r.constraints().iter().all(|c| c.a1 * x + c.a2 * y <= c.b + 1e-12) {
                top = Some(y);
            } else {
                break;
            }
        }
        if let Some(y) = top {
            pts.push((x, 0.0));
            pts.push((x, y));
        }
    }
    hull(pts)
}

fn geometry_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for k in 0..20 {
        let mut cs = vec![
            Constraint::r1(rng.gen_range(0.3..1.0)),
            Constraint::r2(rng.gen_range(0.3..1.0)),
        ];
        for _ in 0..rng.gen_range(1..=3) {
            cs.push(Constraint::new(
                rng.gen_range(0.1..1.0),
                rng.gen_range(0.1..1.0),
                rng.gen_range(0.3..1.0),
            ));
        }
        let region = RateRegion::new(cs).map_err(|e| e.to_string())?;
        let got: Vec<(f64, f64)> = vertices(&region).iter().map(|v| (v.r1, v.r2)).collect();
        let oracle = raster_hull(&region, 1e-3);
        let h = hausdorff(&got, &oracle);
        let da = (area(&region) - polygon_area(&oracle)).abs();
        ensure(h <= 1e-2, format!("region {k}: Hausdorff distance {h}"))?;
        ensure(da <= 1e-2, format!("region {k}: area differs by {da}"))?;
        worst = worst.max(h);
    }
    let a = area(&det_outer_region(&det(5, 3, 0)));
    ensure((a - 20.5).abs() <= 1e-9, format!("area of (5,3,0) is {a}"))?;
    Ok(format!(
        "20 random regions, worst Hausdorff {worst:.2e}; area (5,3,0) = {a}"
    ))
}

fn rationals(weights: &[u32]) -> Vec<BigRational> {
    let total: u32 = weights.iter().sum();
    weights
        .iter()
        .map(|&w| BigRational::new(BigInt::from(w), BigInt::from(total)))
        .collect()
}

fn weights(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..12, 1..=max_len).prop_filter("some mass", |w| w.iter().any(|&x| x > 0))
}

fn mi_properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 50,
        failure_persistence: None,
        ..Config::default()
    });

    // nonnegativity and symmetry on arbitrary joint tables
    runner
        .run(&(weights(20), 1usize..=5), |(w, cols)| {
            let probs = rationals(&w);
            let cells = probs
                .into_iter()
                .enumerate()
                .map(|(i, p)| (((i / cols) as u64, (i % cols) as u64), p));
            let j = JointDist::new(cells).unwrap();
            let a = mutual_information(&j);
            let b = mutual_information(&j.swapped());
            prop_assert!(a.value >= -1e-12);
            if let Some(e) = &a.exact {
                prop_assert!(*e >= BigRational::zero());
            }
            prop_assert!((a.value - b.value).abs() <= 1e-12);
            prop_assert_eq!(a.exact, b.exact);
            Ok(())
        })
        .map_err(|e| format!("nonnegativity/symmetry: {e}"))?;

    // exact zero on product distributions
    runner
        .run(&(weights(6), weights(6)), |(wx, wy)| {
            let (px, py) = (rationals(&wx), rationals(&wy));
            let cells = px.iter().enumerate().flat_map(|(x, a)| {
                py.iter()
                    .enumerate()
                    .map(move |(y, b)| ((x as u64, y as u64), a * b))
            });
            let j = JointDist::new(cells).unwrap();
            let i = mutual_information(&j);
            prop_assert!(i.is_exact_zero(), "I = {:?}", i);
            prop_assert_eq!(i.value, 0.0);
            Ok(())
        })
        .map_err(|e| format!("product distributions: {e}"))?;

    // I(X;X) = H(X)
    runner
        .run(&weights(10), |w| {
            let px = rationals(&w);
            let j = JointDist::new(
                px.iter()
                    .enumerate()
                    .map(|(x, p)| ((x as u64, x as u64), p.clone())),
            )
            .unwrap();
            let i = mutual_information(&j);
            let h = entropy(&px).unwrap();
            prop_assert!((i.value - h.value).abs() <= 1e-12, "{} vs {}", i.value, h.value);
            prop_assert_eq!(i.exact, h.exact);
            Ok(())
        })
        .map_err(|e| format!("self-information: {e}"))?;

    Ok("50 cases each: I >= 0, I(X;Y) = I(Y;X), I = 0 on products, I(X;X) = H(X)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("deterministic region corner points", det_region_corners),
        (
            "deterministic region, high interference",
            det_region_high_interference,
        ),
        ("very high interference region", very_high_regime),
        ("corner schemes exactly secure", corner_schemes_exact),
        ("jamming is necessary", jamming_needed),
        ("secrecy bounds below cooperative bounds", gaussian_dominance),
        ("Gaussian spot values", spot_values),
        ("rho maximization at strong interference", strong_interference_rho),
        ("regions grow with cooperation", cooperation_monotone),
        ("high-SNR correspondence", high_snr_correspondence),
        ("geometry against raster oracle", geometry_oracle),
        ("mutual information properties", mi_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
