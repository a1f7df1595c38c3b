use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use rayon::prelude::*;
use rimhook_core::ring::basis_product;
use rimhook_core::{GrassmannContext, Partition};

use crate::args::TableArgs;
use crate::commands::{context, Outcome};
use crate::document::{parts, CommandEcho, OutputDocument, ResultPayload, TableRow};
use crate::error::CliError;

pub const CSV_HEADER: [&str; 7] = ["l", "k", "lambda", "mu", "nu", "m", "coefficient"];

/// Every nonzero `N_{λμ}^ν` with `m ≤ max_degree`, ordered by `λ`, then `μ`
/// (basis order), then `(m, ν)`.
pub fn table_rows(ctx: GrassmannContext, max_degree: Option<usize>) -> Result<Vec<TableRow>, CliError> {
    let basis = Partition::all_in_rect(ctx);
    let pairs: Vec<(&Partition, &Partition)> = basis.iter().flat_map(|a| basis.iter().map(move |b| (a, b))).collect();
    let chunks: Vec<Vec<TableRow>> = pairs
        .par_iter()
        .map(|(lambda, mu)| {
            let prod = basis_product(lambda, mu, ctx)?;
            Ok(prod
                .terms()
                .filter(|(m, _, _)| max_degree.is_none_or(|d| *m <= d))
                .map(|(m, nu, c)| TableRow {
                    l: ctx.l(),
                    k: ctx.k(),
                    lambda: parts(lambda),
                    mu: parts(mu),
                    nu: parts(nu),
                    m,
                    coefficient: c,
                })
                .collect())
        })
        .collect::<Result<_, CliError>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn join(p: &[usize]) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn write_csv(rows: &[TableRow], out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.l.to_string(),
            r.k.to_string(),
            join(&r.lambda),
            join(&r.mu),
            join(&r.nu),
            r.m.to_string(),
            r.coefficient.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(input: impl Read) -> Result<Vec<TableRow>, CliError> {
    let bad = |what: &str| CliError::BadInput(format!("malformed table: {what}"));
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(|e| bad(&e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(bad("unexpected header"));
    }
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record.map_err(|e| bad(&e.to_string()))?;
        let field = |i: usize| record.get(i).ok_or_else(|| bad("short record"));
        let num = |i: usize| field(i)?.parse::<usize>().map_err(|_| bad("not a number"));
        let part = |i: usize| Ok::<_, CliError>(parts(&field(i)?.parse::<Partition>()?));
        rows.push(TableRow {
            l: num(0)?,
            k: num(1)?,
            lambda: part(2)?,
            mu: part(3)?,
            nu: part(4)?,
            m: num(5)?,
            coefficient: field(6)?.parse().map_err(|_| bad("not a coefficient"))?,
        });
    }
    Ok(rows)
}

pub fn table(args: &TableArgs) -> Result<Outcome, CliError> {
    let ctx = context(args.rect)?;
    let path = args.out.display().to_string();
    let ext = args.out.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
    if !matches!(ext.as_deref(), Some("json" | "csv")) {
        return Err(CliError::BadInput(format!("--out must end in .json or .csv, got {path}")));
    }
    let rows = table_rows(ctx, args.max_degree)?;
    let echo = CommandEcho::Table { l: ctx.l(), k: ctx.k(), max_degree: args.max_degree, out: path.clone() };
    let io = |source| CliError::Io { path: path.clone(), source };
    let mut file = BufWriter::new(File::create(Path::new(&args.out)).map_err(io)?);
    if ext.as_deref() == Some("csv") {
        write_csv(&rows, &mut file).map_err(|e| CliError::Io { path: path.clone(), source: e.into() })?;
    } else {
        let doc = OutputDocument::new(echo.clone(), ResultPayload::Table { rows: rows.clone() });
        writeln!(file, "{}", doc.to_json()?).map_err(io)?;
    }
    file.flush().map_err(io)?;
    let count = rows.len();
    let text = format!("wrote {count} rows to {path}");
    Ok(Outcome {
        document: OutputDocument::new(echo, ResultPayload::Written { path, rows: count }),
        text,
        notes: Vec::new(),
        failure: None,
    })
}
