//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use qcocycle::algebra::{FiniteGroup, GroupRingValue};
use qcocycle::chain::*;
use qcocycle::cocycle::*;
use qcocycle::cover::*;
use qcocycle::knot::*;
use qcocycle::quandle::{conj_quandle, dihedral_embedding, FiniteQuandle};
use rand::Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn ok<T>(r: qcocycle::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn b1b2(p: usize) -> CyclicCocycle {
    cup_product(&b1(p).unwrap(), &b2(p).unwrap()).unwrap()
}

/// δw == f, checked independently of the solver that produced w.
fn witness_holds(f: &CochainTable, w: &CochainTable, cx: &Complex) -> Result<bool, String> {
    let dw = ok(coboundary(w, cx))?;
    Ok(ok(CochainTable::combination(&[(1, &dw), (-1, f)], "residual"))?.is_zero())
}

fn criterion_1() -> Check {
    for p in 3..=15usize {
        for y in 0..p {
            let pi = p as i64;
            // plain integer sum, no library arithmetic
            let mut s = 0i64;
            for i in 0..pi {
                let x = (i * y as i64).rem_euclid(pi);
                let (nx, ny) = ((pi - x) % pi, (pi - y as i64) % pi);
                let b = |a: i64, c: i64| i64::from(a + c >= pi);
                s += i * (b(x, y as i64) - b(nx, ny));
            }
            let expect = match (y, p % 2) {
                (0, _) => 0,
                (_, 1) => -(y as i64),
                _ => pi / 2 - y as i64,
            };
            ensure!(s.rem_euclid(pi) == expect.rem_euclid(pi), "oracle sum p={p} y={y}");
            ensure!(lemma_sum(p, y) as i64 == expect.rem_euclid(pi), "lemma_sum p={p} y={y}");
            ensure!(lemma_closed_form(p, y) as i64 == expect.rem_euclid(pi), "closed form p={p} y={y}");
        }
    }
    Ok(())
}

fn criterion_2() -> Check {
    for p in [3, 5, 7] {
        let z = FiniteGroup::cyclic(p).unwrap();
        let cx = Complex::Group(&z);
        let (b2, d) = (b2(p).unwrap(), d(p).unwrap());
        for f in [&b2, &d, &b1b2(p)] {
            ensure!(ok(is_cocycle(&f.table, &cx))?, "{} is not a cocycle for p={p}", f.kind);
        }
        let diff = ok(CochainTable::combination(&[(1, &d.table), (-2, &b2.table)], "d-2b2"))?;
        let w = ok(is_coboundary(&diff, &cx))?.ok_or(format!("no witness for d-2b2, p={p}"))?;
        ensure!(witness_holds(&diff, &w, &cx)?, "witness fails for p={p}");
    }
    Ok(())
}

fn criterion_3() -> Check {
    for p in [3, 5] {
        let q = FiniteQuandle::dihedral(p).unwrap();
        let cx = Complex::Quandle(&q);
        let th = ok(theta(p, ThetaVariant::Double))?;
        ensure!(ok(is_cocycle(&th, &cx))?, "θ_{p} fails the cocycle condition");
        ensure!(ok(is_coboundary(&th, &cx))?.is_none(), "θ_{p} is a coboundary");
    }
    Ok(())
}

fn criterion_4() -> Check {
    let mut notes = Vec::new();
    for p in [3, 5, 7, 9] {
        let q = FiniteQuandle::dihedral(p).unwrap();
        let cx = Complex::Quandle(&q);
        let avg = ok(average_negation(&ok(b1b2(p).homogeneous())?))?;
        // θ_p(x, y, z) = 2z (d(y−x, z−y) + d(y−x, y−z)) written out directly
        let theta_oracle = |x: usize, y: usize, z: usize| -> u64 {
            let pi = p as i64;
            let b = |a: i64, c: i64| i64::from(a.rem_euclid(pi) + c.rem_euclid(pi) >= pi);
            let d = |a: i64, c: i64| b(a, c) - b(-a, -c);
            let (x, y, z) = (x as i64, y as i64, z as i64);
            (2 * z * (d(y - x, z - y) + d(y - x, y - z))).rem_euclid(pi) as u64
        };
        let th = ok(theta(p, ThetaVariant::Double))?;
        let (mut total, mut bases, mut cohomologous) = (0, 0, true);
        for base in 0..p {
            let pb = ok(phi_pullback(&avg, &q, base))?;
            let mut mismatches = 0;
            for r in 0..p {
                for x in 0..p {
                    for y in 0..p {
                        if pb.get_mod(&[r, x, y]) != th.get_mod(&[r, x, y]) {
                            mismatches += 1;
                        }
                        if base == 0 && th.get_mod(&[r, x, y]) != theta_oracle(r, x, y) {
                            return Err(format!("θ_{p} table disagrees with its formula at {:?}", (r, x, y)));
                        }
                    }
                }
            }
            if mismatches > 0 {
                let diff = ok(CochainTable::combination(&[(1, &pb), (-1, &th)], "diff"))?;
                let w = ok(is_coboundary(&diff, &cx))?;
                cohomologous &= match w {
                    Some(w) => witness_holds(&diff, &w, &cx)?,
                    None => false,
                };
                total += mismatches;
                bases += 1;
            }
        }
        if total > 0 {
            notes.push(format!("p={p}: {total} mismatches over {bases} basepoints, all cohomologous to θ: {cohomologous}"));
        }
    }
    ensure!(notes.is_empty(), "pointwise identity fails away from q=0; {}", notes.join("; "));
    Ok(())
}

fn criterion_5() -> Check {
    for p in [3usize, 5, 7] {
        let d = ok(torus_2p(p))?;
        let q = FiniteQuandle::dihedral(p).unwrap();
        let th = ok(theta(p, ThetaVariant::Double))?;
        let mut seen = vec![false; p];
        for s in ok(enumerate_shadow_colorings(&d, &q))? {
            let c = shadow_cycle(&d, &s);
            if c.terms().any(|(l, _)| l[0] != 0) {
                continue;
            }
            let terms: Vec<Vec<usize>> = c.terms().map(|(l, _)| l.clone()).collect();
            let y = match terms.iter().find(|l| l[1] == 0) {
                Some(l) => l[2],
                None if terms.is_empty() => 0,
                None => continue,
            };
            let v = ok(evaluate_cocycle_on_cycle(&th, &c))?[0] as i64;
            let expect = (-4 * (y * y) as i64).rem_euclid(p as i64);
            ensure!(v == expect, "p={p} y={y}: got {v}, want {expect}");
            seen[y] = true;
        }
        ensure!(seen.iter().all(|&b| b), "p={p}: not every y was reached with r=0, x=0");
        let inv = ok(shadow_cocycle_invariant(&d, &q, &th))?;
        let closed = GroupRingValue::from_exponents(p as u64, (0..p as i64).map(|y| (-4 * y * y, p as i64)));
        ensure!(inv == closed, "p={p}: aggregate {inv} vs {closed}");
    }
    Ok(())
}

fn criterion_6() -> Check {
    let r3 = FiniteQuandle::dihedral(3).unwrap();
    let r5 = FiniteQuandle::dihedral(5).unwrap();
    let h = ok(quandle_homology(&r3, 3, HomologyCoefficients::Field(3)))?;
    ensure!(h.dim == Some(1), "dim H³(R_3;F_3) = {:?}", h.dim);
    let h = ok(quandle_homology(&r3, 3, HomologyCoefficients::Integers))?;
    ensure!(h.rank == 0 && h.torsion == vec![3], "H³(R_3;Z) = rank {} torsion {:?}", h.rank, h.torsion);
    let h = ok(quandle_homology(&r3, 2, HomologyCoefficients::Integers))?;
    ensure!(h.rank == 0 && h.torsion.is_empty(), "H²(R_3;Z) = rank {} torsion {:?}", h.rank, h.torsion);
    let h = ok(quandle_homology(&r5, 3, HomologyCoefficients::Field(5)))?;
    ensure!(h.dim == Some(1), "dim H³(R_5;F_5) = {:?}", h.dim);
    Ok(())
}

fn criterion_7() -> Check {
    let mut rng = common::rng(2024);
    let g6 = FiniteGroup::dihedral(3).unwrap();
    let (conj, ctx) = ok(conj_quandle(&g6, g6.generator("h").unwrap()))?;
    let cases = [
        ("R_3", FiniteQuandle::dihedral(3).unwrap(), dihedral_embedding(3), FiniteGroup::dihedral(3).unwrap()),
        ("R_5", FiniteQuandle::dihedral(5).unwrap(), dihedral_embedding(5), FiniteGroup::dihedral(5).unwrap()),
        ("Conj(h)", conj, ctx.elements.clone(), g6),
    ];
    for (name, q, emb, g) in &cases {
        let perms = ok(q.inner_group(1000))?;
        for i in 0..200 {
            let n = 1 + i % 3;
            let c = common::random_chain(&mut rng, ComplexKind::Rack, Coefficients::Set, n, q.order());
            let base = i % q.order();
            let lhs = ok(delta_boundary(&ok(phi(&c, q, base))?))?;
            let rhs = ok(phi(&ok(rack_boundary(&c, q))?, q, base))?;
            ensure!(delta_coinvariants(&lhs, &perms) == delta_coinvariants(&rhs, &perms), "∂φ ≠ φ∂ on {name}, chain {i}");
            let c = common::random_chain(&mut rng, ComplexKind::Rack, Coefficients::Trivial, n + 1, q.order());
            let lhs = ok(group_boundary(&ok(psi(&c, q, emb))?, g))?;
            let rhs = ok(psi(&ok(rack_boundary(&c, q))?, q, emb))?;
            ensure!(lhs == rhs, "∂ψ ≠ ψ∂ on {name}, chain {i}");
        }
    }
    // ψ(x,y,z) against the six-term display
    let q = FiniteQuandle::dihedral(5).unwrap();
    let emb = dihedral_embedding(5);
    let o = |a, b| q.op(a, b);
    for (x, y, z) in [(0, 1, 3), (2, 2, 4), (1, 4, 0)] {
        let mut c = FormalChain::new(ComplexKind::Rack, 3);
        c.add_term(vec![x, y, z], 1);
        let mut want = FormalChain::new(ComplexKind::GroupInhom, 3);
        for (s, l) in [
            (1, [x, y, z]),
            (-1, [x, z, o(y, z)]),
            (1, [y, z, o(o(x, y), z)]),
            (-1, [y, o(x, y), z]),
            (1, [z, o(x, z), o(y, z)]),
            (-1, [z, o(y, z), o(o(x, y), z)]),
        ] {
            want.add_term(l.iter().map(|&a| emb[a]).collect(), s);
        }
        ensure!(ok(psi(&c, &q, &emb))? == want, "ψ display mismatch at {:?}", (x, y, z));
    }
    Ok(())
}

/// Abelianization by brute force: |Hom(π, Z/n)| for small n pins down a finite cyclic group.
fn hom_count(pres: &GroupPresentation, n: usize) -> usize {
    let k = pres.generators.len();
    let mut count = 0;
    for idx in 0..n.pow(k as u32) {
        let v: Vec<i64> = (0..k).map(|i| (idx / n.pow(i as u32) % n) as i64).collect();
        let ok = pres.relators.iter().all(|r| r.iter().map(|&(g, e)| v[g] * e as i64).sum::<i64>().rem_euclid(n as i64) == 0);
        count += usize::from(ok);
    }
    count
}

fn criterion_8() -> Check {
    let g = FiniteGroup::dihedral(3).unwrap();
    let (q, ctx) = ok(conj_quandle(&g, g.generator("h").unwrap()))?;
    let t = ok(builtin("trefoil"))?;
    let shadows = ok(enumerate_shadow_colorings(&t, &q))?;
    ensure!(!shadows.is_empty(), "no shadow colorings");
    for s in &shadows {
        for &a in &s.arcs {
            let c = ok(branched_cover_cycle(&t, s, a, &ctx, 0))?;
            ensure!(ok(is_group_cycle(&c, &g))?, "nonzero boundary for {s:?}, a={a}");
        }
    }
    for (name, order) in [("trefoil", 3usize), ("fig8", 5)] {
        let pres = ok(cyclic_cover_presentation(&ok(builtin(name))?, 2, true))?;
        let ab = ok(pres.abelianization())?;
        ensure!(ab.rank == 0 && ab.torsion == vec![order as u64], "{name}: {ab}");
        // |Hom(H, Z/n)| = gcd(n, order) for H = Z/order
        for n in 2..=order + 1 {
            ensure!(hom_count(&pres, n) == num_gcd(n, order), "{name}: Hom count into Z/{n}");
        }
    }
    Ok(())
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn criterion_9() -> Check {
    for p in 3..=11usize {
        for q in 0..p as i64 {
            let r = ok(dw_lens(p, q))?;
            ensure!(r.agree(), "p={p} q={q}: {} vs {}", r.triangulation, r.closed_form);
        }
    }
    for p in [3, 5, 7] {
        let c = ok(torus_lens_comparison(p))?;
        ensure!(c.matches() && c.constant == p as i64, "p={p}: {} vs {} (constant {})", c.shadow, c.dw, c.constant);
    }
    Ok(())
}

fn criterion_10() -> Check {
    let p = 3;
    let g = FiniteGroup::dihedral(p).unwrap();
    let q = FiniteQuandle::dihedral(p).unwrap();
    let cx = Complex::Quandle(&q);
    let tr = ok(transfer_d2p(&ok(b1b2(p).homogeneous())?, p))?;
    let pb = ok(psi_pullback(&tr, &g, &q, &dihedral_embedding(p)))?;
    let w = ok(is_coboundary(&pb, &cx))?.ok_or("no witness")?;
    ensure!(witness_holds(&pb, &w, &cx)?, "witness fails");
    Ok(())
}

fn brute_force_colorings(d: &KnotDiagram, q: &FiniteQuandle) -> Vec<Vec<usize>> {
    let (n, m) = (d.arc_count(), q.order());
    (0..m.pow(n as u32))
        .map(|idx| (0..n).map(|i| idx / m.pow((n - 1 - i) as u32) % m).collect::<Vec<_>>())
        .filter(|a| {
            d.crossings().iter().all(|c| {
                let (x, y, z) = (a[d.arc_of_edge(c.under_in)], a[d.arc_of_edge(c.over_in)], a[d.arc_of_edge(c.under_out)]);
                if c.epsilon() > 0 {
                    q.op(x, y) == z
                } else {
                    q.op(z, y) == x
                }
            })
        })
        .collect()
}

fn criterion_11() -> Check {
    let th = |p| theta(p, ThetaVariant::Double).unwrap();
    for (a, b) in [("trefoil", "trefoil_alt"), ("fig8", "fig8_r2")] {
        let (da, db) = (ok(builtin(a))?, ok(builtin(b))?);
        for p in [3, 5, 7] {
            let q = FiniteQuandle::dihedral(p).unwrap();
            let (ia, ib) = (ok(shadow_cocycle_invariant(&da, &q, &th(p)))?, ok(shadow_cocycle_invariant(&db, &q, &th(p)))?);
            ensure!(ia == ib, "{a} vs {b} over R_{p}: {ia} vs {ib}");
        }
    }

    let mut rng = common::rng(17);
    for (name, p) in [("trefoil", 3), ("fig8", 5), ("trefoil_alt", 3)] {
        let d = ok(builtin(name))?;
        let q = FiniteQuandle::dihedral(p).unwrap();
        for arcs in enumerate_arc_colorings(&d, &q) {
            let eval = |r, c| -> Result<Vec<u64>, String> {
                let regions = ok(complete_region_coloring(&d, &q, &arcs, r, c))?;
                ok(evaluate_cocycle_on_cycle(&th(p), &shadow_cycle(&d, &ShadowColoring { arcs: arcs.clone(), regions })))
            };
            let v0 = eval(0, 0)?;
            for _ in 0..5 {
                let (r, c) = (rng.gen_range(0..d.region_count()), rng.gen_range(0..p));
                ensure!(eval(r, c)? == v0, "{name}: seed ({r}, {c}) changes the value");
            }
        }
    }

    let g = FiniteGroup::symmetric(3).unwrap();
    let quandles = vec![
        FiniteQuandle::dihedral(3).unwrap(),
        FiniteQuandle::dihedral(4).unwrap(),
        FiniteQuandle::dihedral(5).unwrap(),
        FiniteQuandle::trivial(2).unwrap(),
        ok(conj_quandle(&g, g.element_by_label("102").unwrap()))?.0,
    ];
    let t = ok(builtin("trefoil"))?;
    let mut diagrams = vec![ok(builtin("unknot"))?, t.clone(), ok(builtin("fig8"))?];
    for k in 0..4u8 {
        diagrams.push(ok(r1_kink(&t, 1 + k as usize, k))?);
    }
    for d in &diagrams {
        ensure!(d.crossing_count() <= 4, "{d} has too many crossings");
        for q in &quandles {
            ensure!(enumerate_arc_colorings(d, q) == brute_force_colorings(d, q), "{d} over {}", q.tag());
        }
    }

    // same output with 1, 2 and 4 workers and on the sequential path
    let run = || -> Result<String, String> {
        let d = ok(torus_2p(7))?;
        let q = FiniteQuandle::dihedral(7).unwrap();
        let inv = ok(shadow_cocycle_invariant(&d, &q, &th(7)))?;
        let f = ok(builtin("fig8"))?;
        let q5 = FiniteQuandle::dihedral(5).unwrap();
        let cols = enumerate_arc_colorings(&f, &q5);
        let h = ok(quandle_homology(&q5, 2, HomologyCoefficients::Integers))?;
        let w = ok(is_coboundary(&th(5), &Complex::Quandle(&q5)))?.is_some();
        Ok(format!("{inv}|{cols:?}|{h:?}|{w}"))
    };
    let reference = qcocycle::par::sequential(run)?;
    for workers in [1, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().map_err(|e| e.to_string())?;
        ensure!(pool.install(run)? == reference, "output differs with {workers} workers");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("lemma sums", criterion_1),
        ("cyclic cocycles and d - 2b2 witness", criterion_2),
        ("theta non-trivial", criterion_3),
        ("pullback equals theta for every basepoint", criterion_4),
        ("torus evaluation", criterion_5),
        ("quandle homology", criterion_6),
        ("phi and psi chain maps", criterion_7),
        ("branched-cover cycles and abelianizations", criterion_8),
        ("Dijkgraaf-Witten sums and torus comparison", criterion_9),
        ("psi pullback of transfer is a coboundary", criterion_10),
        ("robustness", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
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
