//! Turning `gen` arguments into graphs.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use gpgame::families::{
    lexicographic, random_connected_bipartite, random_connected_graph, random_tree, CaterpillarSpec, FamilyError,
    FamilyHSpec, FamilySpec, GenPetersenSpec, GrsSpec, HjkSpec, KneserSpec, MultipartiteSpec,
};
use gpgame::graph::{read_graph, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("unknown family `{0}` (try one of: {FAMILY_NAMES})")]
    UnknownFamily(String),
    #[error("{family}: {msg}")]
    Params { family: String, msg: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{path}: {msg}")]
    Input { path: String, msg: String },
}

pub const FAMILY_NAMES: &str = "path, cycle, complete, star, cocktail, hypercube, multipartite, kneser, petersen, \
grs, hjk, caterpillar, family-h, random-tree, random-graph, random-bipartite, lex";

/// Usage text for each family, shown by `gen --help`.
pub const FAMILY_HELP: &str = "\
families and parameters:
  path N | cycle N | complete N | star LEAVES | cocktail T | hypercube D
  multipartite A,B,...        parts in nonincreasing order, e.g. 4,3,3
  kneser N K                  K(N,K), needs N >= 2K
  petersen N K                generalised Petersen P(N,K)
  grs R S                     glued C4 copies with triangles
  hjk J K                     clique with connectors
  caterpillar T1,T2,...       leaf counts per central vertex (see --subdiv)
  family-h BLOCKS PENDANTS PATHS   comma lists, `-` for empty
  random-tree N SEED | random-graph N M SEED | random-bipartite N M SEED
  lex G.gp H.gp               lexicographic product of two graph files";

struct Args<'a> {
    family: &'a str,
    params: &'a [String],
}

impl Args<'_> {
    fn err(&self, msg: impl Into<String>) -> GenError {
        GenError::Params { family: self.family.to_string(), msg: msg.into() }
    }

    fn expect(&self, n: usize, usage: &str) -> Result<(), GenError> {
        if self.params.len() == n {
            Ok(())
        } else {
            Err(self.err(format!("expected {n} parameter(s): {usage}")))
        }
    }

    fn num(&self, i: usize) -> Result<usize, GenError> {
        let p = &self.params[i];
        p.parse().map_err(|_| self.err(format!("`{p}` is not a non-negative integer")))
    }

    fn seed(&self, i: usize) -> Result<u64, GenError> {
        let p = &self.params[i];
        p.parse().map_err(|_| self.err(format!("`{p}` is not a valid seed")))
    }

    fn list(&self, i: usize) -> Result<Vec<usize>, GenError> {
        parse_list(&self.params[i]).map_err(|m| self.err(m))
    }
}

/// Comma-separated non-negative integers; `-` or an empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("`{x}` in `{s}` is not a non-negative integer")))
        .collect()
}

/// Resolves a family name and its positional parameters to a spec, for the
/// families that have one.
pub fn parse_spec(family: &str, params: &[String], subdiv: Option<&str>) -> Result<Option<FamilySpec>, GenError> {
    let a = Args { family, params };
    if subdiv.is_some() && family != "caterpillar" {
        return Err(a.err("--subdiv only applies to caterpillars"));
    }
    let spec = match family {
        "path" | "cycle" | "complete" | "star" | "cocktail" | "hypercube" => {
            a.expect(1, "N")?;
            let n = a.num(0)?;
            match family {
                "path" => FamilySpec::Path(n),
                "cycle" => FamilySpec::Cycle(n),
                "complete" => FamilySpec::Complete(n),
                "star" => FamilySpec::Star(n),
                "cocktail" => FamilySpec::CocktailParty(n),
                _ => FamilySpec::Hypercube(n),
            }
        }
        "multipartite" => {
            // accept `4,3,3` as well as `4 3 3`
            let parts = if params.len() == 1 {
                a.list(0)?
            } else {
                (0..params.len()).map(|i| a.num(i)).collect::<Result<_, _>>()?
            };
            FamilySpec::Multipartite(MultipartiteSpec { parts })
        }
        "kneser" | "petersen" | "grs" | "hjk" => {
            a.expect(2, "two integers")?;
            let (x, y) = (a.num(0)?, a.num(1)?);
            match family {
                "kneser" => FamilySpec::Kneser(KneserSpec { n: x, k: y }),
                "petersen" => FamilySpec::GenPetersen(GenPetersenSpec { n: x, k: y }),
                "grs" => FamilySpec::Grs(GrsSpec { r: x, s: y }),
                _ => FamilySpec::Hjk(HjkSpec { j: x, k: y }),
            }
        }
        "caterpillar" => {
            a.expect(1, "T1,T2,...")?;
            let t = a.list(0)?;
            let spec = match subdiv.map(parse_list).transpose().map_err(|m| a.err(m))? {
                None => CaterpillarSpec::new(t),
                Some(c) if c.len() == 1 => CaterpillarSpec::uniform(t, c[0]),
                Some(c) => CaterpillarSpec::new(t).with_subdivisions(c),
            };
            FamilySpec::Caterpillar(spec)
        }
        "family-h" => {
            a.expect(3, "BLOCKS PENDANTS PATHS")?;
            FamilySpec::FamilyH(FamilyHSpec {
                blocks: a.list(0)?,
                pendant_at_block: a.list(1)?,
                paths_at_u: a.list(2)?,
            })
        }
        "random-tree" | "random-graph" | "random-bipartite" | "lex" => return Ok(None),
        _ => return Err(GenError::UnknownFamily(family.to_string())),
    };
    Ok(Some(spec))
}

pub fn read_graph_file(path: &Path) -> Result<Graph, GenError> {
    let input = |msg: String| GenError::Input { path: path.display().to_string(), msg };
    let f = File::open(path).map_err(|e| input(e.to_string()))?;
    read_graph(BufReader::new(f)).map_err(|e| input(e.to_string()))
}

/// Builds the requested graph.
pub fn generate(family: &str, params: &[String], subdiv: Option<&str>) -> Result<Graph, GenError> {
    if let Some(spec) = parse_spec(family, params, subdiv)? {
        return Ok(spec.build()?);
    }
    let a = Args { family, params };
    match family {
        "random-tree" => {
            a.expect(2, "N SEED")?;
            Ok(random_tree(a.num(0)?, a.seed(1)?)?)
        }
        "random-graph" | "random-bipartite" => {
            a.expect(3, "N M SEED")?;
            let (n, m, seed) = (a.num(0)?, a.num(1)?, a.seed(2)?);
            if family == "random-graph" {
                Ok(random_connected_graph(n, m, seed)?)
            } else {
                Ok(random_connected_bipartite(n, m, seed)?)
            }
        }
        "lex" => {
            a.expect(2, "G.gp H.gp")?;
            let g = read_graph_file(Path::new(&params[0]))?;
            let h = read_graph_file(Path::new(&params[1]))?;
            Ok(lexicographic(&g, &h)?)
        }
        _ => Err(GenError::UnknownFamily(family.to_string())),
    }
}
