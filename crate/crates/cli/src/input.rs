use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Args;
use mengerian::classify::{Caps, DecideOptions};
use mengerian::graph::{parse_edge_list, parse_graph6, FamilySpec};
use mengerian::Graph;

use crate::error::CliError;

pub const FAMILY_HELP: &str = "\
Graph families (--family NAME:P1,P2,...), vertices numbered 1..n:
  path:k             1 - 2 - ... - k
  cycle:k            1 - 2 - ... - k - 1                (k >= 3)
  star:k             centre 1, leaves 2..k+1
  double_star:p,q    centres 1 - 2; p leaves on 1, then q leaves on 2
  spider:l1,...,lr   centre 1; legs of the given lengths, numbered outward
  star_plus_edge:k   star:k plus the edge 2 - 3
  complete:k         all pairs

Edge lists (--edges, --file) use 1-based labels, one edge per line
(`u v`), with an optional `n <count>` header; --edges also accepts
`1-2,2-3` on a single line.

Exit codes: 0 success, 2 property refuted under --assert, 1 error.";

#[derive(Args, Debug, Clone)]
#[group(id = "source", required = true, multiple = false)]
pub struct GraphSource {
    /// Named family, e.g. `cycle:8` or `spider:2,1,1`
    #[arg(long, group = "source")]
    pub family: Option<String>,
    /// Inline edge list, e.g. `1-2,2-3,3-1`
    #[arg(long, group = "source")]
    pub edges: Option<String>,
    /// Edge-list file (`-` for stdin)
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,
    /// graph6 string
    #[arg(long, group = "source")]
    pub graph6: Option<String>,
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph, CliError> {
        if let Some(f) = &self.family {
            let spec: FamilySpec = f.parse()?;
            return Ok(spec.build()?);
        }
        if let Some(e) = &self.edges {
            let text = e.replace([',', ';'], "\n").replace('-', " ");
            return Ok(parse_edge_list(&text)?);
        }
        if let Some(p) = &self.file {
            return Ok(parse_edge_list(&read_source(p)?)?);
        }
        if let Some(g) = &self.graph6 {
            return Ok(parse_graph6(g.trim())?);
        }
        Err(CliError::Usage("no graph given".into()))
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct CapArgs {
    /// Largest vertex count for polyhedron and power computations
    #[arg(long)]
    pub cap_vertices: Option<usize>,
    /// Largest power the power-equality test may need
    #[arg(long)]
    pub cap_power: Option<usize>,
    /// Largest vertex count for the 3^n minor scan
    #[arg(long)]
    pub cap_packing_n: Option<usize>,
}

impl CapArgs {
    pub fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            max_n: self.cap_vertices.unwrap_or(d.max_n),
            max_power: self.cap_power.unwrap_or(d.max_power),
            max_packing_n: self.cap_packing_n.unwrap_or(d.max_packing_n),
        }
    }

    pub fn options(&self, force_power_equality: bool) -> DecideOptions {
        DecideOptions {
            caps: self.caps(),
            force_power_equality,
        }
    }
}

pub fn read_source(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text)
}
