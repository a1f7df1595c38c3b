use std::fmt::Write as _;

use rimhook_core::oracle::pieri_giambelli_product;
use rimhook_core::partition::complement_dual;
use rimhook_core::rim::{n_core, strip_hooks};
use rimhook_core::ring::{basis_product, qlr_terms, reduce_schur_term, PreimageTerm};
use rimhook_core::tableau::{enumerate_ssyt, is_proper, kostka_shape, quantum_kostka, Graded};
use rimhook_core::{GrassmannContext, QClass};

use crate::args::{CoreArgs, ProductArgs, QkostkaArgs, QlrArgs, Rect, ReduceArgs};
use crate::document::{class_terms, parts, CommandEcho, OutputDocument, PreimageDoc, ResultPayload, TermDoc};
use crate::error::CliError;

/// What a command produced: the document, its text rendering, notes for
/// stderr and whether a verification step failed.
#[derive(Debug)]
pub struct Outcome {
    pub document: OutputDocument,
    pub text: String,
    pub notes: Vec<String>,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(document: OutputDocument, text: String) -> Self {
        Outcome { document, text, notes: Vec::new(), failure: None }
    }
}

pub fn context(rect: Rect) -> Result<GrassmannContext, CliError> {
    Ok(GrassmannContext::new(rect.l, rect.k)?)
}

fn degree_note(total: usize, weight: usize, ctx: GrassmannContext) -> String {
    format!(
        "degree mismatch: {total} - {weight} is not a nonnegative multiple of n = {}, so no q-degree applies",
        ctx.n()
    )
}

fn signed_split(terms: &[PreimageTerm]) -> Result<String, CliError> {
    let mut contributions = Vec::with_capacity(terms.len());
    for t in terms {
        let c = i64::try_from(t.classical).map_err(|_| CliError::Invariant("classical coefficient overflows".into()))?;
        contributions.push(t.sign * c);
    }
    let (pos, neg): (Vec<i64>, Vec<i64>) = contributions.iter().partition(|&&c| c > 0);
    let mut out = String::new();
    for (i, c) in pos.iter().chain(&neg).enumerate() {
        match (i, *c < 0) {
            (0, false) => write!(out, "{c}"),
            (0, true) => write!(out, "-{}", -c),
            (_, false) => write!(out, " + {c}"),
            (_, true) => write!(out, " - {}", -c),
        }
        .expect("writing to a String");
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

pub fn qlr(args: &QlrArgs) -> Result<Outcome, CliError> {
    let ctx = context(args.rect)?;
    for p in [&args.lambda, &args.mu, &args.nu] {
        if !ctx.fits(p) {
            return Err(rimhook_core::Error::NotInRectangle { partition: p.clone(), l: ctx.l(), k: ctx.k() }.into());
        }
    }
    let nu = if args.dual { complement_dual(&args.nu, ctx)? } else { args.nu.clone() };
    let echo = CommandEcho::Qlr {
        l: ctx.l(),
        k: ctx.k(),
        lambda: parts(&args.lambda),
        mu: parts(&args.mu),
        nu: parts(&args.nu),
        dual: args.dual,
        explain: args.explain,
    };
    let total = args.lambda.weight() + args.mu.weight();
    let (m, terms) = match qlr_terms(&args.lambda, &args.mu, &nu, ctx)? {
        Graded::DegreeMismatch => {
            let note = degree_note(total, nu.weight(), ctx);
            let result = ResultPayload::Coefficient { value: 0, m: None, note: Some(note.clone()), terms: Vec::new() };
            let mut out = Outcome::ok(OutputDocument::new(echo, result), "0".into());
            out.notes.push(note);
            return Ok(out);
        }
        Graded::Degree { m, value } => (m, value),
    };
    let mut value = 0i64;
    for t in &terms {
        let c = i64::try_from(t.classical).map_err(|_| CliError::Invariant("classical coefficient overflows".into()))?;
        value = t
            .sign
            .checked_mul(c)
            .and_then(|x| value.checked_add(x))
            .ok_or_else(|| CliError::Invariant("coefficient overflow".into()))?;
    }
    if value < 0 {
        return Err(CliError::Invariant(format!("negative quantum Littlewood-Richardson number {value}")));
    }
    let mut text = value.to_string();
    if args.explain {
        text.clear();
        if args.dual {
            writeln!(text, "ν^∨ = {nu}").unwrap();
        }
        writeln!(text, "q-degree m = {m}").unwrap();
        for t in &terms {
            let sign = if t.sign < 0 { '-' } else { '+' };
            writeln!(text, "ρ = {}  ε = {sign}1  classical = {}", t.rho, t.classical).unwrap();
        }
        write!(text, "N = {} = {value}", signed_split(&terms)?).unwrap();
    }
    let docs = terms
        .iter()
        .map(|t| PreimageDoc { rho: parts(&t.rho), sign: t.sign, classical: t.classical })
        .collect();
    let result = ResultPayload::Coefficient { value, m: Some(m), note: None, terms: docs };
    Ok(Outcome::ok(OutputDocument::new(echo, result), text))
}

/// `Σ c q^m σ_ν ↦ Σ c q^m σ_{ν^∨}`.
fn dual_indexed(x: &QClass) -> Result<QClass, CliError> {
    let ctx = x.ctx();
    let mut out = QClass::zero(ctx);
    for (m, nu, c) in x.terms() {
        out = out.checked_add(&QClass::term(ctx, c, m, complement_dual(nu, ctx)?)?)?;
    }
    Ok(out)
}

pub fn product(args: &ProductArgs) -> Result<Outcome, CliError> {
    let ctx = context(args.rect)?;
    let prod = basis_product(&args.lambda, &args.mu, ctx)?;
    let mut failure = None;
    let verified = if args.verify {
        let check = pieri_giambelli_product(&args.lambda, &args.mu, ctx)?;
        if check != prod {
            failure = Some(format!("verification failed: the Giambelli route gives {check}, the rim-hook route gives {prod}"));
        }
        Some(check == prod)
    } else {
        None
    };
    let shown = if args.dual { dual_indexed(&prod)? } else { prod };
    let echo = CommandEcho::Product {
        l: ctx.l(),
        k: ctx.k(),
        lambda: parts(&args.lambda),
        mu: parts(&args.mu),
        dual: args.dual,
        verify: args.verify,
    };
    let result = ResultPayload::Class { terms: class_terms(&shown), verified };
    Ok(Outcome { document: OutputDocument::new(echo, result), text: shown.to_string(), notes: Vec::new(), failure })
}

pub fn qkostka(args: &QkostkaArgs) -> Result<Outcome, CliError> {
    let ctx = context(args.rect)?;
    let mu = &args.mu_list;
    let echo = CommandEcho::Qkostka {
        l: ctx.l(),
        k: ctx.k(),
        lambda: parts(&args.lambda),
        nu: parts(&args.nu),
        mu_list: mu.entries().to_vec(),
        show_tableaux: args.show_tableaux,
    };
    let (m, value) = match quantum_kostka(&args.lambda, mu, &args.nu, ctx)? {
        Graded::DegreeMismatch => {
            let note = degree_note(args.lambda.weight() + mu.total(), args.nu.weight(), ctx);
            let result = ResultPayload::Kostka { value: 0, m: None, note: Some(note.clone()), tableaux: Vec::new() };
            let mut out = Outcome::ok(OutputDocument::new(echo, result), "0".into());
            out.notes.push(note);
            return Ok(out);
        }
        Graded::Degree { m, value } => (m, value),
    };
    let mut tableaux = Vec::new();
    if args.show_tableaux {
        if let Some((_, Some(shape))) = kostka_shape(&args.lambda, mu, &args.nu, ctx)? {
            for t in enumerate_ssyt(&shape, mu)? {
                if is_proper(&t, ctx) {
                    tableaux.push(t.to_string());
                }
            }
        }
        if tableaux.len() as u64 != value {
            return Err(CliError::Invariant("listed tableaux disagree with the count".into()));
        }
    }
    let mut text = value.to_string();
    for t in &tableaux {
        write!(text, "\n\n{t}").unwrap();
    }
    let result = ResultPayload::Kostka { value, m: Some(m), note: None, tableaux };
    Ok(Outcome::ok(OutputDocument::new(echo, result), text))
}

pub fn reduce(args: &ReduceArgs) -> Result<Outcome, CliError> {
    let ctx = context(args.rect)?;
    let term = reduce_schur_term(&args.lambda, ctx)?;
    let text = term.as_ref().map_or_else(|| "0".to_string(), |t| t.to_string());
    let echo = CommandEcho::Reduce { l: ctx.l(), k: ctx.k(), lambda: parts(&args.lambda) };
    let term = term.map(|t| TermDoc { coefficient: t.sign, m: t.m, partition: parts(&t.core) });
    Ok(Outcome::ok(OutputDocument::new(echo, ResultPayload::Reduced { term }), text))
}

pub fn core(args: &CoreArgs) -> Result<Outcome, CliError> {
    if args.n == 0 {
        return Err(CliError::BadInput("n must be positive".into()));
    }
    let (core, widths, sign) = match args.k {
        Some(k) => {
            let l = args.n.checked_sub(k).filter(|&l| l >= 1 && k >= 1).ok_or_else(|| {
                CliError::BadInput(format!("k = {k} must satisfy 1 <= k < n = {}", args.n))
            })?;
            let r = n_core(&args.lambda, args.n, GrassmannContext::new(l, k)?)?;
            (r.core, r.widths, Some(r.sign))
        }
        None => {
            let (core, widths) = strip_hooks(&args.lambda, args.n)?;
            (core, widths, None)
        }
    };
    let width_list: Vec<String> = widths.iter().map(|w| w.to_string()).collect();
    let mut text = format!("core {core}\nm={}\nwidths=[{}]", widths.len(), width_list.join(","));
    if let Some(s) = sign {
        write!(text, "\nsign={}", if s < 0 { "-1" } else { "+1" }).unwrap();
    }
    let echo = CommandEcho::Core { n: args.n, k: args.k, lambda: parts(&args.lambda) };
    let result = ResultPayload::Core { core: parts(&core), m: widths.len(), widths, sign };
    Ok(Outcome::ok(OutputDocument::new(echo, result), text))
}

