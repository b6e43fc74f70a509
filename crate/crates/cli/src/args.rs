use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "trophyp",
    version,
    about = "Exact checks for positively hyperbolic varieties, positroids and tropical curves"
)]
pub struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, env = "TROPHYP_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for sweeps; 1 runs sequentially.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// JSON input file, or `-` for standard input.
    #[arg(long = "in", value_name = "FILE")]
    pub path: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct VecArg {
    /// Comma-separated rationals, e.g. `1,0,-1/2`.
    #[arg(long = "vec", allow_hyphen_values = true)]
    pub vec: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sign changes after discarding zeros.
    Var(VecArg),
    /// Sign changes with zeros chosen to maximize the count.
    Varbar(VecArg),
    /// Classify the row space of a full-rank matrix by its Plücker signs.
    Grassmannian(Input),
    /// Test whether a complex row space is positively hyperbolic.
    LinearHyp(Input),
    #[command(subcommand)]
    /// Validate, dualize or split a matroid.
    Matroid(MatroidCmd),
    /// Decide whether a matroid is a positroid.
    Positroid(Input),
    #[command(subcommand)]
    /// Cones and membership in the Bergman fan.
    Bergman(BergmanCmd),
    #[command(subcommand)]
    /// Newton polytopes, M-convexity and stability of polynomials.
    Poly(PolyCmd),
    #[command(subcommand)]
    /// Tropical curve fans and signed parametrizations.
    Curve(CurveCmd),
    /// Signed permutations preserving positive hyperbolicity in codimension c.
    Preservers {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Decide positive hyperbolicity of the toric variety of an integer matrix.
    ToricCheck {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        /// Number of sampled trials.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    #[command(subcommand)]
    /// Enumerate small matroids.
    Catalog(CatalogCmd),
    /// Render a Bergman fan, a curve fan or an explicit complex as SVG.
    #[command(group(ArgGroup::new("source").required(true).args(["matroid", "curve", "complex"])))]
    Plot {
        /// Matroid JSON; draws its Bergman fan.
        #[arg(long, value_name = "FILE")]
        matroid: Option<PathBuf>,
        /// Curve fan JSON.
        #[arg(long, value_name = "FILE")]
        curve: Option<PathBuf>,
        /// Complex JSON `{"n", "cells": [{"points", "rays"}]}`.
        #[arg(long, value_name = "FILE")]
        complex: Option<PathBuf>,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check the certificate of a failing verdict.
    Verify {
        #[arg(long, value_name = "FILE")]
        certificate: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum MatroidCmd {
    /// Check the basis exchange axiom.
    Validate(Input),
    /// Bases of the dual matroid.
    Dual(Input),
    /// Connected components, 1-indexed.
    Components(Input),
}

#[derive(Subcommand, Debug)]
pub enum BergmanCmd {
    /// Cones of the given dimension (maximal by default).
    Cones {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Whether every cone of the given dimension has non-crossing span.
    Noncrossing {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Whether a weight vector lies in the Bergman fan.
    Member {
        #[command(flatten)]
        input: Input,
        /// Weight vector, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolyCmd {
    /// Vertices of the Newton polytope.
    Newton(Input),
    /// Whether every edge of the Newton polytope is parallel to some e_i − e_j.
    GpCheck(Input),
    /// Exchange axiom for a set of lattice points `{"n", "points"}`.
    Mset(Input),
    /// Whether the valuations form an M-convex function.
    Mfun(Input),
    /// Initial form with respect to a weight.
    Tinit {
        #[command(flatten)]
        input: Input,
        /// Weight vector, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Stability of `a·x^alpha + b·x^beta`. Coefficients are `re` or `re,im`.
    Binomial {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        beta: String,
    },
    /// Search for a positive line meeting the hypersurface at a nonreal point.
    Falsify {
        #[command(flatten)]
        input: Input,
        /// Number of sampled trials.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CurveCmd {
    /// Whether the weighted ray sum is a multiple of (1, …, 1).
    Balance(Input),
    /// Whether every ray is a cyclic block of ones.
    Shape(Input),
    /// Irreducible pieces, as chains of blocks.
    Decompose(Input),
    /// Signed parametrization of each irreducible piece.
    Speyer {
        #[command(flatten)]
        input: Input,
        /// Root constants, one per block; defaults to 1, 2, ….
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
    },
    /// Sample `varbar(Im x) ≥ n − 2` on a parametrization.
    Sample {
        #[command(flatten)]
        input: Input,
        /// Number of sampled trials.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Decompose, parametrize and tropicalize back.
    Roundtrip(Input),
}

#[derive(Subcommand, Debug)]
pub enum CatalogCmd {
    /// Every matroid on `[n]`.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        loopless: bool,
    },
}
