//! Command-line interface definition.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "hypoly",
    version,
    about = "Convex hyperbolic polygons with prescribed angles: incircle construction, perimeter minimization, rendering"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the unique polygon with an inscribed circle
    Incircle(IncircleArgs),
    /// Verify that the incircle polygon minimizes the perimeter
    Minimize(MinimizeArgs),
    /// Render a polygon as an SVG figure in the Poincaré disk
    Render(RenderArgs),
    /// Validate a polygon JSON file
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct AngleArgs {
    /// Interior angles, one per vertex (degrees unless --rad)
    #[arg(required = true, num_args = 3..)]
    pub angles: Vec<f64>,
    /// Interpret the angles as radians
    #[arg(long)]
    pub rad: bool,
    /// Interpret the angles as degrees (the default)
    #[arg(long, conflicts_with = "rad")]
    pub deg: bool,
}

impl AngleArgs {
    pub fn radians(&self) -> Vec<f64> {
        if self.rad {
            self.angles.clone()
        } else {
            self.angles.iter().map(|a| a.to_radians()).collect()
        }
    }
}

#[derive(Args, Debug)]
pub struct IncircleArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    /// Emit the solution as JSON instead of a table
    #[arg(long)]
    pub json: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MinimizeArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    /// Seed for the manifold sampling
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of sampled polygons
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Emit the report as JSON instead of a summary
    #[arg(long)]
    pub json: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    /// Interior angles; the incircle polygon is rendered unless --lengths is
    /// also given (degrees unless --rad)
    #[arg(long, num_args = 3..)]
    pub angles: Option<Vec<f64>>,
    /// Interpret the angles as radians
    #[arg(long)]
    pub rad: bool,
    /// Interpret the angles as degrees (the default)
    #[arg(long, conflicts_with = "rad")]
    pub deg: bool,
    /// Edge lengths matching --angles (always hyperbolic length units)
    #[arg(long, num_args = 3.., requires = "angles")]
    pub lengths: Option<Vec<f64>>,
    /// Polygon or incircle-solution JSON file to render
    #[arg(long, conflicts_with = "angles")]
    pub input: Option<PathBuf>,
    /// Image width (and height) in pixels
    #[arg(long, default_value_t = 512)]
    pub width_px: u32,
    /// Geodesic samples per edge
    #[arg(long, default_value_t = 64)]
    pub samples_per_edge: usize,
    /// Draw the inscribed circle (requires a perimeter-critical polygon)
    #[arg(long)]
    pub incircle: bool,
    /// Annotate the figure with a table of the edge duals
    #[arg(long)]
    pub duals_table: bool,
    /// Write the SVG to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Polygon or incircle-solution JSON file
    pub input: PathBuf,
}
