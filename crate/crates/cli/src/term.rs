//! Parenthesized cotree terms: `(x 0 (+ (x 1 2) 3))`, where `x` is a join,
//! `+` a union and integers are vertices.

use catprod_core::{Cotree, CotreeLabel};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("unexpected end of term")]
    UnexpectedEnd,
    #[error("unexpected token `{0}`")]
    Unexpected(String),
    #[error("internal node needs at least two children")]
    TooFewChildren,
    #[error("leaves must be exactly the vertices 0..n, each once")]
    BadLeaves,
}

pub fn write_cotree(tree: &Cotree) -> String {
    let mut out = String::new();
    write_node(tree, tree.root(), &mut out);
    out
}

fn write_node(tree: &Cotree, node: usize, out: &mut String) {
    match tree.label(node) {
        None => out.push_str(&tree.leaf_vertex(node).unwrap().to_string()),
        Some(label) => {
            out.push('(');
            out.push(match label {
                CotreeLabel::Join => 'x',
                CotreeLabel::Union => '+',
            });
            for &c in tree.children(node) {
                out.push(' ');
                write_node(tree, c, out);
            }
            out.push(')');
        }
    }
}

fn tokens(s: &str) -> Vec<String> {
    s.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_owned)
        .collect()
}

pub fn parse_cotree(s: &str) -> Result<Cotree, TermError> {
    let toks = tokens(s);
    let mut pos = 0;
    let tree = parse_node(&toks, &mut pos)?;
    if let Some(extra) = toks.get(pos) {
        return Err(TermError::Unexpected(extra.clone()));
    }
    if !tree.leaves_are_vertex_set() {
        return Err(TermError::BadLeaves);
    }
    Ok(tree)
}

fn parse_node(toks: &[String], pos: &mut usize) -> Result<Cotree, TermError> {
    let tok = toks.get(*pos).ok_or(TermError::UnexpectedEnd)?;
    *pos += 1;
    if tok != "(" {
        return tok
            .parse()
            .map(Cotree::leaf)
            .map_err(|_| TermError::Unexpected(tok.clone()));
    }
    let label = match toks.get(*pos).map(String::as_str) {
        Some("x") => CotreeLabel::Join,
        Some("+") => CotreeLabel::Union,
        Some(other) => return Err(TermError::Unexpected(other.to_owned())),
        None => return Err(TermError::UnexpectedEnd),
    };
    *pos += 1;
    let mut children = Vec::new();
    loop {
        match toks.get(*pos).map(String::as_str) {
            None => return Err(TermError::UnexpectedEnd),
            Some(")") => {
                *pos += 1;
                break;
            }
            Some(_) => children.push(parse_node(toks, pos)?),
        }
    }
    if children.len() < 2 {
        return Err(TermError::TooFewChildren);
    }
    Ok(Cotree::internal(label, children))
}

#[cfg(test)]
mod tests {
    use super::*;
    use catprod_core::generators::paw;
    use catprod_core::{build_cotree, realize};

    #[test]
    fn paw_term() {
        let t = build_cotree(&paw()).unwrap();
        assert_eq!(write_cotree(&t), "(x 0 (+ (x 1 2) 3))");
        let back = parse_cotree("(x 0 (+ (x 1 2) 3))").unwrap();
        assert_eq!(realize(&back), paw());
    }

    #[test]
    fn leaf_term() {
        assert_eq!(write_cotree(&Cotree::leaf(0)), "0");
        assert_eq!(parse_cotree(" 0 ").unwrap(), Cotree::leaf(0));
    }

    #[test]
    fn bad_terms() {
        assert_eq!(parse_cotree(""), Err(TermError::UnexpectedEnd));
        assert_eq!(parse_cotree("(x 0"), Err(TermError::UnexpectedEnd));
        assert_eq!(parse_cotree("(x 0)"), Err(TermError::TooFewChildren));
        assert_eq!(parse_cotree("(y 0 1)"), Err(TermError::Unexpected("y".into())));
        assert_eq!(parse_cotree("(x 0 1) 2"), Err(TermError::Unexpected("2".into())));
        assert_eq!(parse_cotree("(x 0 2)"), Err(TermError::BadLeaves));
        assert_eq!(parse_cotree("(+ 0 0)"), Err(TermError::BadLeaves));
    }
}
