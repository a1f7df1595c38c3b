use std::collections::BTreeMap;

use rimhook_core::oracle::{pieri_giambelli_product, y_closed_form};
use rimhook_core::ring::{duality_map, qlr_terms, quantum_dual_pieri, quantum_pieri, reduce_schur, ProductCache};
use rimhook_core::tableau::{classical_lr, conjugate_quantum_kostka, quantum_kostka, Graded};
use rimhook_core::{ContentVector, GrassmannContext, Partition, QClass};

use crate::args::SelftestArgs;
use crate::commands::Outcome;
use crate::document::{CheckDoc, CommandEcho, OutputDocument, ResultPayload};
use crate::error::CliError;

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: u64,
    first: Option<String>,
}

#[derive(Default)]
struct Suites {
    tallies: BTreeMap<&'static str, Tally>,
    order: Vec<&'static str>,
}

impl Suites {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if !self.tallies.contains_key(name) {
            self.order.push(name);
        }
        let t = self.tallies.entry(name).or_default();
        t.cases += 1;
        if !ok {
            t.failures += 1;
            if t.first.is_none() {
                t.first = Some(detail());
            }
        }
    }
}

/// Every single-row content of length at most 2 with entries in `0..=k`.
fn short_contents(k: usize) -> Vec<ContentVector> {
    let mut out: Vec<ContentVector> = (0..=k).map(|a| ContentVector::new(vec![a])).collect();
    for a in 0..=k {
        for b in 0..=k {
            out.push(ContentVector::new(vec![a, b]));
        }
    }
    out
}

fn sweep(ctx: GrassmannContext, suites: &mut Suites, fault: &mut bool) -> Result<(), CliError> {
    let (l, k, n) = (ctx.l(), ctx.k(), ctx.n());
    let here = format!("{l}x{k}");
    let basis = Partition::all_in_rect(ctx);
    let mut cache = ProductCache::new(ctx);
    let mut dual_cache = ProductCache::new(ctx.dual());

    for (i, lambda) in basis.iter().enumerate() {
        for mu in &basis {
            let prod = cache.basis_product(lambda, mu)?;
            let total = lambda.weight() + mu.weight();
            for (m, nu, c) in prod.terms() {
                suites.record("grading", m * n + nu.weight() == total, || format!("{here}: {lambda} * {mu} has q^{m} σ[{nu}]"));
                suites.record("nonnegativity", c > 0, || format!("{here}: {lambda} * {mu} has {c} q^{m} σ[{nu}]"));
            }
            let swapped = cache.basis_product(mu, lambda)?;
            suites.record("commutativity", swapped == prod, || format!("{here}: {lambda} * {mu}"));

            let giambelli = pieri_giambelli_product(lambda, mu, ctx)?;
            suites.record("giambelli route", giambelli == prod, || format!("{here}: {lambda} * {mu}"));

            let at_zero = prod.at_q_zero();
            let mut classical_ok = true;
            for nu in basis.iter().filter(|nu| nu.weight() == total) {
                classical_ok &= at_zero.coefficient(0, nu) as u64 == classical_lr(lambda, mu, nu)?;
            }
            classical_ok &= at_zero.terms().all(|(_, nu, _)| nu.weight() == total);
            suites.record("classical part", classical_ok, || format!("{here}: {lambda} * {mu}"));

            let dual = dual_cache.basis_product(&lambda.conjugate(), &mu.conjugate())?;
            suites.record("duality of products", duality_map(&prod) == dual, || format!("{here}: {lambda} * {mu}"));

            if basis[..=i].contains(mu) {
                for nu in &basis {
                    let Graded::Degree { m, value: mut terms } = qlr_terms(lambda, mu, nu, ctx)? else { continue };
                    if *fault && !terms.is_empty() {
                        terms[0].sign = -terms[0].sign;
                        *fault = false;
                    }
                    let sum: i64 = terms.iter().map(|t| t.sign * t.classical as i64).sum();
                    suites.record("preimage sums", sum == prod.coefficient(m, nu), || {
                        format!("{here}: N[{lambda}; {mu}; {nu}] sums to {sum}, product has {}", prod.coefficient(m, nu))
                    });
                }
            }
        }
        for p in 1..=k {
            let ok = quantum_pieri(p, lambda, ctx)? == cache.basis_product(&Partition::row(p), lambda)?;
            suites.record("pieri", ok, || format!("{here}: σ_{p} * {lambda}"));
        }
        for p in 1..=l {
            let ok = quantum_dual_pieri(p, lambda, ctx)? == cache.basis_product(&Partition::column(p), lambda)?;
            suites.record("dual pieri", ok, || format!("{here}: σ_(1^{p}) * {lambda}"));
        }
        for nu in &basis {
            for mu in short_contents(k) {
                let direct = quantum_kostka(lambda, &mu, nu, ctx)?;
                let conj = conjugate_quantum_kostka(&lambda.conjugate(), &mu, &nu.conjugate(), ctx.dual())?;
                suites.record("duality of kostka numbers", direct == conj, || {
                    format!("{here}: K[{lambda}; {:?}; {nu}]", mu.entries())
                });
            }
        }
    }

    if basis.len() <= 20 {
        let classes: Vec<QClass> = basis.iter().map(|b| QClass::basis(ctx, b.clone())).collect::<Result<_, _>>()?;
        for a in &classes {
            for b in &classes {
                let ab = cache.mul(a, b)?;
                for c in &classes {
                    let bc = cache.mul(b, c)?;
                    let ok = cache.mul(&ab, c)? == cache.mul(a, &bc)?;
                    suites.record("associativity", ok, || format!("{here}: ({a}) ({b}) ({c})"));
                }
            }
        }
    }

    for r in 0..=3 * n {
        let ok = reduce_schur(&Partition::column(r), ctx)? == y_closed_form(r, ctx)?;
        suites.record("column classes", ok, || format!("{here}: r = {r}"));
    }
    Ok(())
}

/// Runs every suite on all `l, k ≤ max_size`; with `inject_fault` one sign
/// in the preimage sums is flipped.
pub fn run_suites(max_size: usize, inject_fault: bool) -> Result<(Vec<CheckDoc>, Vec<String>), CliError> {
    let mut suites = Suites::default();
    let mut fault = inject_fault;
    for l in 1..=max_size {
        for k in 1..=max_size {
            sweep(GrassmannContext::new(l, k)?, &mut suites, &mut fault)?;
        }
    }
    let mut checks = Vec::new();
    let mut details = Vec::new();
    for name in suites.order {
        let t = &suites.tallies[name];
        checks.push(CheckDoc { name: name.to_string(), cases: t.cases, failures: t.failures });
        if let Some(d) = &t.first {
            details.push(format!("{name}: first failure at {d}"));
        }
    }
    Ok((checks, details))
}

pub fn selftest(args: &SelftestArgs) -> Result<Outcome, CliError> {
    if args.max_size == 0 {
        return Err(CliError::BadInput("--max-size must be at least 1".into()));
    }
    let (checks, details) = run_suites(args.max_size, args.inject_fault)?;
    let passed = checks.iter().all(|c| c.failures == 0);
    let mut lines: Vec<String> = checks
        .iter()
        .map(|c| {
            let status = if c.failures == 0 { "PASS" } else { "FAIL" };
            format!("{status} {} ({} cases, {} failures)", c.name, c.cases, c.failures)
        })
        .collect();
    lines.push(if passed { "selftest passed".into() } else { "selftest FAILED".into() });
    let echo = CommandEcho::Selftest { max_size: args.max_size };
    Ok(Outcome {
        document: OutputDocument::new(echo, ResultPayload::Selftest { passed, checks }),
        text: lines.join("\n"),
        notes: details,
        failure: (!passed).then(|| "one or more invariant suites failed".to_string()),
    })
}
