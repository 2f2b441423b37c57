mod commands;
mod settings;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sva_core::SvaError;

use settings::{CommonArgs, Resolved};

/// Structural variation analysis of co-citation networks.
///
/// Tables are tab-separated. Score tables list paper_id, citation_count,
/// delta_m, cl, c_kl, h, alpha, beta, entropy and then one rank_* column per
/// metric in the same order. Values carry six decimals; an empty field marks
/// an undefined metric. Exit status is 0 on success, 1 on data errors and 2
/// on configuration errors.
#[derive(Debug, Parser)]
#[command(name = "sva", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score every paper of the target year against its baseline network.
    ///
    /// Writes scores.tsv, the baseline network, and one augmented network per
    /// paper with novel links under novel/. A k sweep suffixes each name with
    /// _k<K>.
    Score {
        #[command(flatten)]
        common: CommonArgs,
        /// Score only these paper ids.
        #[arg(long, value_delimiter = ',')]
        targets: Option<Vec<String>>,
        /// Papers listed in the printed summary.
        #[arg(long)]
        top: Option<usize>,
    },
    /// Merge two or more seed papers into a pseudopaper and score it.
    ///
    /// Writes pseudo.tsv (role, then the score columns), sweep.tsv (k, nodes,
    /// edges, clusters, then the score columns) and pseudo_corpus.jsonl.
    Pseudo {
        #[command(flatten)]
        common: CommonArgs,
        /// Seed paper ids, comma separated.
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<String>>,
        /// Leave citations to a seed from years other than its own and the
        /// placement year untouched.
        #[arg(long)]
        strict: bool,
    },
    /// Expand a sub-corpus from seeds by backward and forward citation hops.
    ///
    /// Writes expanded.jsonl and profile.tsv.
    Expand {
        #[command(flatten)]
        common: CommonArgs,
        /// Seed paper ids, comma separated.
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<String>>,
        /// Backward (reference) hops [default: 1].
        #[arg(long)]
        backward: Option<usize>,
        /// Forward (citing) hops [default: 1].
        #[arg(long)]
        forward: Option<usize>,
    },
    /// Export the clustered baseline network of the target year.
    ///
    /// Writes the network and clusters.tsv (node_id, cluster, window_citations).
    Export {
        #[command(flatten)]
        common: CommonArgs,
    },
}

impl Command {
    fn common(&self) -> &CommonArgs {
        match self {
            Command::Score { common, .. }
            | Command::Pseudo { common, .. }
            | Command::Expand { common, .. }
            | Command::Export { common } => common,
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let res = Resolved::new(cli.command.common())?;
    let artifacts = match cli.command {
        Command::Score { targets, top, .. } => commands::score(&res, targets, top)?,
        Command::Pseudo { seeds, strict, .. } => commands::pseudo(&res, seeds, strict)?,
        Command::Expand {
            seeds,
            backward,
            forward,
            ..
        } => commands::expand(&res, seeds, backward, forward)?,
        Command::Export { .. } => commands::export(&res)?,
    };
    artifacts.write_to(&res.out)?;
    for path in artifacts.paths() {
        log::info!("wrote {}", res.out.join(path).display());
    }
    print!("{}", artifacts.stdout);
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<SvaError>() {
        Some(e) if e.is_config_error() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
