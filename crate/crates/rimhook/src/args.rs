use clap::{Args, Parser, Subcommand};
use rimhook_core::{ContentVector, Partition};

#[derive(Debug, Parser)]
#[command(name = "rimhook", version, about = "Quantum Littlewood-Richardson and quantum Kostka numbers for Grassmannians")]
pub struct Cli {
    /// Print the result as a JSON document.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient of q^m σ_ν in σ_λ · σ_μ.
    Qlr(QlrArgs),
    /// Full expansion of σ_λ · σ_μ.
    Product(ProductArgs),
    /// Quantum Kostka number for σ_{μ_r} ⋯ σ_{μ_1} · σ_λ.
    Qkostka(QkostkaArgs),
    /// Rim-hook reduction of the Schur class of an arbitrary partition.
    Reduce(ReduceArgs),
    /// n-core of a partition.
    Core(CoreArgs),
    /// Every structure constant of one ring, written to a file.
    Table(TableArgs),
    /// Run the invariant suites on all rectangles up to a size.
    Selftest(SelftestArgs),
}

/// The rectangle l × k, i.e. Gr(l, l + k).
#[derive(Debug, Clone, Copy, Args)]
pub struct Rect {
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct QlrArgs {
    #[command(flatten)]
    pub rect: Rect,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    pub mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    pub nu: Partition,
    /// Replace ν by its complement ν^∨ in the rectangle.
    #[arg(long)]
    pub dual: bool,
    /// List every contributing ρ with its sign and classical coefficient.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[command(flatten)]
    pub rect: Rect,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    pub mu: Partition,
    /// Index terms by ν^∨, so the coefficient of q^m σ_ρ is ⟨σ_λ, σ_μ, σ_ρ⟩_m.
    #[arg(long)]
    pub dual: bool,
    /// Recompute through the Giambelli determinant; exit 1 on mismatch.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct QkostkaArgs {
    #[command(flatten)]
    pub rect: Rect,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    pub nu: Partition,
    /// Row lengths μ_1,…,μ_r (zeros allowed, empty for none).
    #[arg(long, value_parser = parse_content, default_value = "")]
    pub mu_list: ContentVector,
    /// Print the proper tableaux being counted.
    #[arg(long)]
    pub show_tableaux: bool,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub rect: Rect,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
}

#[derive(Debug, Args)]
pub struct CoreArgs {
    #[arg(long)]
    pub n: usize,
    /// Also report the sign (−1)^{Σ(k − width)}; needs 1 ≤ k < n.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub rect: Rect,
    /// Keep only terms with q-degree at most this.
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Output file; the format follows the extension (.json or .csv).
    #[arg(long)]
    pub out: std::path::PathBuf,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Largest l and k to sweep.
    #[arg(long, default_value_t = 3)]
    pub max_size: usize,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    s.trim().parse::<Partition>().map_err(|e| e.to_string())
}

pub fn parse_content(s: &str) -> Result<ContentVector, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(ContentVector::new(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("not a row length: {t:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(ContentVector::new)
}
