//! The plain-text instance format.
//!
//! ```text
//! # optional comments
//! 3 8
//! 3 5 8
//! ```
//!
//! The first non-comment line holds `n t`; the remaining non-comment lines
//! hold exactly `n` positive items.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use ssum_core::Instance;

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, u64, usize)> = None;
    let mut items = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if fields.len() != 2 {
                    bail!("line {line_no}: expected \"n t\", found {line:?}");
                }
                let n = fields[0]
                    .parse::<usize>()
                    .with_context(|| format!("line {line_no}: bad item count {:?}", fields[0]))?;
                let t = fields[1]
                    .parse::<u64>()
                    .with_context(|| format!("line {line_no}: bad target {:?}", fields[1]))?;
                header = Some((n, t, line_no));
            }
            Some((n, _, _)) => {
                for tok in line.split_whitespace() {
                    let x = tok
                        .parse::<u64>()
                        .with_context(|| format!("line {line_no}: bad item {tok:?}"))?;
                    if x == 0 {
                        bail!("line {line_no}: items must be positive");
                    }
                    items.push(x);
                    if items.len() > n {
                        bail!("line {line_no}: more than the declared {n} items");
                    }
                }
            }
        }
    }
    let Some((n, t, line_no)) = header else {
        bail!("line 1: missing \"n t\" header");
    };
    if items.len() != n {
        bail!(
            "line {line_no}: header declares {n} items but {} were given",
            items.len()
        );
    }
    Ok(Instance::new(items, t)?)
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Renders an instance, preceded by the given comment lines.
pub fn format_instance(instance: &Instance, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        writeln!(s, "# {c}").unwrap();
    }
    writeln!(s, "{} {}", instance.n(), instance.target()).unwrap();
    let items: Vec<String> = instance.items().iter().map(u64::to_string).collect();
    writeln!(s, "{}", items.join(" ")).unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let inst = Instance::new(vec![3, 5, 8], 8).unwrap();
        let text = format_instance(&inst, &["hello".into()]);
        assert_eq!(text, "# hello\n3 8\n3 5 8\n");
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_instance("# c\n3 8\n3 5\n").unwrap_err();
        assert!(format!("{e:#}").contains("line 2"), "{e:#}");
        let e = parse_instance("2 5\n2 x\n").unwrap_err();
        assert!(format!("{e:#}").contains("line 2"), "{e:#}");
        let e = parse_instance("2 5 7\n2 4\n").unwrap_err();
        assert!(format!("{e:#}").contains("line 1"), "{e:#}");
        let e = parse_instance("2 5\n2 0\n").unwrap_err();
        assert!(format!("{e:#}").contains("positive"), "{e:#}");
        assert!(parse_instance("").is_err());
    }

    #[test]
    fn items_may_span_lines() {
        let inst = parse_instance("4 6\n1 2\n# mid\n3 4\n").unwrap();
        assert_eq!(inst.items(), &[1, 2, 3, 4]);
    }
}
