//! The line-oriented object definition format shared by the library and the
//! command-line tool.
//!
//! ```text
//! # comment
//! dim 4
//! bracket 1 3 4 = 1*e1
//! bracket 2 3 4 = 1*e2 + -1/2*e4
//! cobracket 1 = -1*e2^e3^e4
//! map e1 -> 1*e2
//! ```
//!
//! A file declares its dimension first, then any number of `bracket`,
//! `cobracket`, or `map` lines. Coefficients are integers or `p/q`
//! rationals. `bracket`/`cobracket` lines describe algebras, coalgebras, or
//! (when both appear) bialgebras; `map` lines describe a linear map and
//! cannot be mixed with the others. Serialization is canonical: triples
//! sorted lexicographically, zero terms omitted, so parse-serialize
//! round-trips are byte-identical on canonical input.

use crate::algebra::ThreeLieAlgebra;
use crate::bialgebra::ThreeLieBialgebra;
use crate::coalgebra::ThreeLieCoalgebra;
use crate::equivalence::LinearIso;
use crate::linalg::{zero_vector, Vector};
use crate::scalar::ExactScalar;
use crate::tensor::{sort_triple, AlternatingTrivector};
use crate::Error;

/// Object kinds a definition file can describe (maps are detected from
/// `map` lines and need no hint).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ObjectKind {
    Algebra,
    Coalgebra,
    Bialgebra,
}

impl ObjectKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ObjectKind::Algebra => "algebra",
            ObjectKind::Coalgebra => "coalgebra",
            ObjectKind::Bialgebra => "bialgebra",
        }
    }
}

impl std::str::FromStr for ObjectKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "algebra" => Ok(ObjectKind::Algebra),
            "coalgebra" => Ok(ObjectKind::Coalgebra),
            "bialgebra" => Ok(ObjectKind::Bialgebra),
            other => Err(Error::Parse {
                line: 0,
                message: format!(
                    "unknown kind `{other}` (expected algebra, coalgebra, or bialgebra)"
                ),
            }),
        }
    }
}

/// A parsed definition file.
#[derive(Clone, Debug, PartialEq)]
pub enum FileObject {
    Algebra(ThreeLieAlgebra),
    Coalgebra(ThreeLieCoalgebra),
    Bialgebra(ThreeLieBialgebra),
    Map(LinearIso),
}

impl FileObject {
    pub fn kind_name(&self) -> &'static str {
        match self {
            FileObject::Algebra(_) => "algebra",
            FileObject::Coalgebra(_) => "coalgebra",
            FileObject::Bialgebra(_) => "bialgebra",
            FileObject::Map(_) => "map",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FileObject::Algebra(a) => a.dim(),
            FileObject::Coalgebra(c) => c.dim(),
            FileObject::Bialgebra(b) => b.dim(),
            FileObject::Map(f) => f.dim(),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_scalar(token: &str, line: usize) -> Result<ExactScalar, Error> {
    token
        .parse()
        .map_err(|_| err(line, format!("invalid rational `{token}`")))
}

fn parse_index(token: &str, dim: usize, line: usize) -> Result<usize, Error> {
    let idx: usize = token
        .parse()
        .map_err(|_| err(line, format!("invalid index `{token}`")))?;
    if idx < 1 || idx > dim {
        return Err(err(line, format!("index {idx} out of range 1..={dim}")));
    }
    Ok(idx)
}

/// Splits `c*e...` into the coefficient and the part after `*e`.
fn split_term(token: &str, line: usize) -> Result<(ExactScalar, &str), Error> {
    let (coeff, rest) = token
        .split_once("*e")
        .ok_or_else(|| err(line, format!("expected `<coeff>*e<index>` term, got `{token}`")))?;
    Ok((parse_scalar(coeff, line)?, rest))
}

/// Terms are single whitespace tokens separated by standalone `+` tokens.
fn term_tokens<'a>(tokens: &[&'a str], line: usize) -> Result<Vec<&'a str>, Error> {
    if tokens.is_empty() {
        return Err(err(line, "expected at least one term"));
    }
    let mut out = Vec::new();
    let mut expect_term = true;
    for &t in tokens {
        if expect_term {
            if t == "+" {
                return Err(err(line, "expected a term before `+`"));
            }
            out.push(t);
        } else if t != "+" {
            return Err(err(line, format!("expected `+` between terms, got `{t}`")));
        }
        expect_term = !expect_term;
    }
    if expect_term {
        return Err(err(line, "trailing `+` without a term"));
    }
    Ok(out)
}

struct ParsedLines {
    dim: usize,
    brackets: Vec<((usize, usize, usize), Vector, usize)>,
    cobrackets: Vec<(usize, AlternatingTrivector, usize)>,
    map_columns: Vec<(usize, Vector, usize)>,
}

fn parse_lines(text: &str) -> Result<ParsedLines, Error> {
    let mut dim: Option<usize> = None;
    let mut brackets = Vec::new();
    let mut cobrackets = Vec::new();
    let mut map_columns = Vec::new();

    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "dim" => {
                if dim.is_some() {
                    return Err(err(line, "duplicate dim line"));
                }
                if tokens.len() != 2 {
                    return Err(err(line, "expected `dim <m>`"));
                }
                let m: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(line, format!("invalid dimension `{}`", tokens[1])))?;
                if m == 0 {
                    return Err(err(line, "dimension must be positive"));
                }
                dim = Some(m);
            }
            "bracket" => {
                let m = dim.ok_or_else(|| err(line, "dim must be declared first"))?;
                if tokens.len() < 6 || tokens[4] != "=" {
                    return Err(err(line, "expected `bracket <i> <j> <k> = <terms>`"));
                }
                let i = parse_index(tokens[1], m, line)?;
                let j = parse_index(tokens[2], m, line)?;
                let k = parse_index(tokens[3], m, line)?;
                let mut value = zero_vector(m);
                for t in term_tokens(&tokens[5..], line)? {
                    let (coeff, rest) = split_term(t, line)?;
                    let l = parse_index(rest, m, line)?;
                    value[l - 1] += &coeff;
                }
                brackets.push(((i, j, k), value, line));
            }
            "cobracket" => {
                let m = dim.ok_or_else(|| err(line, "dim must be declared first"))?;
                if tokens.len() < 4 || tokens[2] != "=" {
                    return Err(err(line, "expected `cobracket <l> = <terms>`"));
                }
                let l = parse_index(tokens[1], m, line)?;
                let mut value = AlternatingTrivector::zero(m);
                for t in term_tokens(&tokens[3..], line)? {
                    let (coeff, rest) = split_term(t, line)?;
                    let parts: Vec<&str> = rest.split("^e").collect();
                    if parts.len() != 3 {
                        return Err(err(
                            line,
                            format!("expected `<coeff>*e<i>^e<j>^e<k>` term, got `{t}`"),
                        ));
                    }
                    let i = parse_index(parts[0], m, line)?;
                    let jj = parse_index(parts[1], m, line)?;
                    let kk = parse_index(parts[2], m, line)?;
                    value
                        .add_wedge(i, jj, kk, coeff)
                        .expect("indices validated");
                }
                cobrackets.push((l, value, line));
            }
            "map" => {
                let m = dim.ok_or_else(|| err(line, "dim must be declared first"))?;
                if tokens.len() < 4 || tokens[2] != "->" {
                    return Err(err(line, "expected `map e<i> -> <terms>`"));
                }
                let source = tokens[1]
                    .strip_prefix('e')
                    .ok_or_else(|| err(line, format!("expected `e<i>`, got `{}`", tokens[1])))?;
                let i = parse_index(source, m, line)?;
                let mut value = zero_vector(m);
                for t in term_tokens(&tokens[3..], line)? {
                    let (coeff, rest) = split_term(t, line)?;
                    let l = parse_index(rest, m, line)?;
                    value[l - 1] += &coeff;
                }
                map_columns.push((i, value, line));
            }
            other => {
                return Err(err(
                    line,
                    format!("unknown directive `{other}` (expected dim, bracket, cobracket, or map)"),
                ));
            }
        }
    }

    let dim = dim.ok_or_else(|| err(text.lines().count().max(1), "missing dim line"))?;
    Ok(ParsedLines {
        dim,
        brackets,
        cobrackets,
        map_columns,
    })
}

fn build_algebra(parsed: &ParsedLines) -> Result<ThreeLieAlgebra, Error> {
    let mut list: Vec<((usize, usize, usize), Vector)> = Vec::new();
    let mut seen: Vec<([usize; 3], Vector, usize)> = Vec::new();
    for ((i, j, k), value, line) in &parsed.brackets {
        match sort_triple(*i, *j, *k) {
            None => {
                if !crate::linalg::vector_is_zero(value) {
                    return Err(err(
                        *line,
                        format!("nonzero bracket on repeated index triple ({i}, {j}, {k})"),
                    ));
                }
            }
            Some((key, negative)) => {
                let signed = if negative {
                    crate::linalg::vector_neg(value)
                } else {
                    value.clone()
                };
                if let Some((_, existing, first_line)) =
                    seen.iter().find(|(k2, _, _)| *k2 == key)
                {
                    if existing != &signed {
                        return Err(err(
                            *line,
                            format!(
                                "bracket on triple ({}, {}, {}) conflicts with line {first_line}",
                                key[0], key[1], key[2]
                            ),
                        ));
                    }
                } else {
                    seen.push((key, signed, *line));
                }
            }
        }
        list.push(((*i, *j, *k), value.clone()));
    }
    ThreeLieAlgebra::from_brackets(parsed.dim, &list)
        .map_err(|e| err(0, format!("invalid algebra: {e}")))
}

fn build_coalgebra(parsed: &ParsedLines) -> Result<ThreeLieCoalgebra, Error> {
    let mut seen: Vec<(usize, usize)> = Vec::new();
    let mut list: Vec<(usize, AlternatingTrivector)> = Vec::new();
    for (l, value, line) in &parsed.cobrackets {
        if let Some((_, first_line)) = seen.iter().find(|(l2, _)| l2 == l) {
            let existing = list
                .iter()
                .find(|(l2, _)| l2 == l)
                .map(|(_, v)| v)
                .expect("seen implies stored");
            if existing != value {
                return Err(err(
                    *line,
                    format!("cobracket of e{l} conflicts with line {first_line}"),
                ));
            }
        } else {
            seen.push((*l, *line));
            list.push((*l, value.clone()));
        }
    }
    ThreeLieCoalgebra::from_cobrackets(parsed.dim, &list)
        .map_err(|e| err(0, format!("invalid coalgebra: {e}")))
}

fn build_map(parsed: &ParsedLines) -> Result<LinearIso, Error> {
    let mut columns = vec![zero_vector(parsed.dim); parsed.dim];
    let mut seen = vec![None::<usize>; parsed.dim];
    for (i, value, line) in &parsed.map_columns {
        if let Some(first_line) = seen[i - 1] {
            return Err(err(
                *line,
                format!("image of e{i} already given on line {first_line}"),
            ));
        }
        seen[i - 1] = Some(*line);
        columns[i - 1] = value.clone();
    }
    LinearIso::from_images(&columns).map_err(|e| err(0, format!("invalid map: {e}")))
}

/// Parses a definition file, inferring the kind from the lines present.
pub fn parse(text: &str) -> Result<FileObject, Error> {
    parse_inner(text, None)
}

/// Parses a definition file as the given kind; missing halves of a
/// bialgebra default to zero.
pub fn parse_with_kind(text: &str, kind: ObjectKind) -> Result<FileObject, Error> {
    parse_inner(text, Some(kind))
}

fn parse_inner(text: &str, kind: Option<ObjectKind>) -> Result<FileObject, Error> {
    let parsed = parse_lines(text)?;
    let has_map = !parsed.map_columns.is_empty();
    let has_brackets = !parsed.brackets.is_empty();
    let has_cobrackets = !parsed.cobrackets.is_empty();
    if has_map {
        if has_brackets || has_cobrackets {
            return Err(err(
                parsed.map_columns[0].2,
                "map lines cannot be mixed with bracket or cobracket lines",
            ));
        }
        if kind.is_some() {
            return Err(err(
                parsed.map_columns[0].2,
                "map files do not take an object kind",
            ));
        }
        return Ok(FileObject::Map(build_map(&parsed)?));
    }
    let kind = match kind {
        Some(k) => k,
        None => match (has_brackets, has_cobrackets) {
            (true, false) => ObjectKind::Algebra,
            (false, true) => ObjectKind::Coalgebra,
            (true, true) => ObjectKind::Bialgebra,
            (false, false) => {
                return Err(err(
                    1,
                    "cannot infer kind of an empty object; pass the kind explicitly",
                ))
            }
        },
    };
    match kind {
        ObjectKind::Algebra => {
            if has_cobrackets {
                return Err(err(
                    parsed.cobrackets[0].2,
                    "cobracket line in an algebra file",
                ));
            }
            Ok(FileObject::Algebra(build_algebra(&parsed)?))
        }
        ObjectKind::Coalgebra => {
            if has_brackets {
                return Err(err(
                    parsed.brackets[0].2,
                    "bracket line in a coalgebra file",
                ));
            }
            Ok(FileObject::Coalgebra(build_coalgebra(&parsed)?))
        }
        ObjectKind::Bialgebra => Ok(FileObject::Bialgebra(
            ThreeLieBialgebra::new(build_algebra(&parsed)?, build_coalgebra(&parsed)?)
                .expect("both halves share the parsed dimension"),
        )),
    }
}

fn write_terms(out: &mut String, terms: &[(ExactScalar, String)]) {
    for (n, (coeff, basis)) in terms.iter().enumerate() {
        if n > 0 {
            out.push_str(" + ");
        }
        out.push_str(&format!("{coeff}*{basis}"));
    }
}

fn algebra_lines(out: &mut String, algebra: &ThreeLieAlgebra) {
    for (key, value) in algebra.brackets() {
        let terms: Vec<(ExactScalar, String)> = value
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (c.clone(), format!("e{}", l + 1)))
            .collect();
        out.push_str(&format!("bracket {} {} {} = ", key[0], key[1], key[2]));
        write_terms(out, &terms);
        out.push('\n');
    }
}

fn coalgebra_lines(out: &mut String, coalgebra: &ThreeLieCoalgebra) {
    for (l, value) in coalgebra.cobrackets() {
        let terms: Vec<(ExactScalar, String)> = value
            .iter()
            .map(|(key, c)| (c.clone(), format!("e{}^e{}^e{}", key[0], key[1], key[2])))
            .collect();
        out.push_str(&format!("cobracket {l} = "));
        write_terms(out, &terms);
        out.push('\n');
    }
}

/// Canonical serialization: `dim` first, brackets on sorted triples in
/// lexicographic order, cobrackets by basis index, map columns in order,
/// zero terms omitted.
pub fn serialize(object: &FileObject) -> String {
    let mut out = format!("dim {}\n", object.dim());
    match object {
        FileObject::Algebra(a) => algebra_lines(&mut out, a),
        FileObject::Coalgebra(c) => coalgebra_lines(&mut out, c),
        FileObject::Bialgebra(b) => {
            algebra_lines(&mut out, b.algebra());
            coalgebra_lines(&mut out, b.coalgebra());
        }
        FileObject::Map(f) => {
            for i in 0..f.dim() {
                let column = f.matrix().column(i);
                let terms: Vec<(ExactScalar, String)> = column
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(r, c)| (c.clone(), format!("e{}", r + 1)))
                    .collect();
                out.push_str(&format!("map e{} -> ", i + 1));
                write_terms(&mut out, &terms);
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra_from_int_brackets;
    use crate::coalgebra::coalgebra_from_int_cobrackets;

    #[test]
    fn parse_algebra_and_roundtrip() {
        let text = "dim 4\nbracket 2 3 4 = 1*e1\nbracket 1 3 4 = 1*e2\n";
        let FileObject::Algebra(a) = parse(text).unwrap() else {
            panic!("expected algebra");
        };
        let expected =
            algebra_from_int_brackets(4, &[((2, 3, 4), &[(1, 1)]), ((1, 3, 4), &[(1, 2)])]);
        assert_eq!(a, expected);

        let canonical = serialize(&FileObject::Algebra(expected));
        assert_eq!(canonical, "dim 4\nbracket 1 3 4 = 1*e2\nbracket 2 3 4 = 1*e1\n");
        assert_eq!(serialize(&parse(&canonical).unwrap()), canonical);
    }

    #[test]
    fn parse_bialgebra_and_comments() {
        let text = "# a pair\ndim 4\nbracket 1 3 4 = 1*e1  # inline comment\n\ncobracket 1 = -1*e2^e3^e4\n";
        let FileObject::Bialgebra(b) = parse(text).unwrap() else {
            panic!("expected bialgebra");
        };
        assert_eq!(b.algebra().bracket_basis(1, 3, 4)[0], ExactScalar::one());
        assert_eq!(
            b.coalgebra().constant(2, 3, 4, 1),
            ExactScalar::int(-1)
        );
    }

    #[test]
    fn parse_map_file() {
        let text = "dim 2\nmap e1 -> 1*e2\nmap e2 -> -1*e1\n";
        let FileObject::Map(f) = parse(text).unwrap() else {
            panic!("expected map");
        };
        assert_eq!(f.apply(&crate::linalg::unit_vector(2, 1)), crate::linalg::unit_vector(2, 2));
        assert_eq!(serialize(&FileObject::Map(f)), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "dim 3\nbracket 1 1 2 = 1*e3\n";
        match parse(bad) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("repeated index"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }

        let conflict = "dim 3\nbracket 1 2 3 = 1*e1\nbracket 2 1 3 = 1*e1\n";
        match parse(conflict) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }

        let out_of_range = "dim 3\nbracket 1 2 4 = 1*e1\n";
        match parse(out_of_range) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("out of range"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }

        let missing_dim = "bracket 1 2 3 = 1*e1\n";
        assert!(matches!(parse(missing_dim), Err(Error::Parse { line: 1, .. })));

        let bad_rat = "dim 3\ncobracket 1 = 1/0*e1^e2^e3\n";
        assert!(matches!(parse(bad_rat), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn kind_hint_fills_missing_half() {
        let text = "dim 3\nbracket 1 2 3 = 1*e1\n";
        let FileObject::Bialgebra(b) = parse_with_kind(text, ObjectKind::Bialgebra).unwrap()
        else {
            panic!("expected bialgebra");
        };
        assert!(b.coalgebra().is_zero());

        // abelian algebra from a bare dim line
        let FileObject::Algebra(a) = parse_with_kind("dim 2\n", ObjectKind::Algebra).unwrap()
        else {
            panic!("expected algebra");
        };
        assert!(a.is_abelian());

        // a cobracket line contradicts an algebra hint
        assert!(parse_with_kind(
            "dim 3\ncobracket 1 = 1*e1^e2^e3\n",
            ObjectKind::Algebra
        )
        .is_err());
    }

    #[test]
    fn consistent_duplicates_are_accepted() {
        let text = "dim 3\nbracket 1 2 3 = 1*e1\nbracket 2 1 3 = -1*e1\n";
        assert!(parse(text).is_ok());

        let tdup = "dim 3\ncobracket 1 = 1*e1^e2^e3\ncobracket 1 = 1*e1^e2^e3\n";
        assert!(parse(tdup).is_ok());
        let tbad = "dim 3\ncobracket 1 = 1*e1^e2^e3\ncobracket 1 = 2*e1^e2^e3\n";
        assert!(matches!(parse(tbad), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn serialize_rational_coefficients() {
        let mut t = AlternatingTrivector::zero(4);
        t.add_wedge(2, 3, 4, ExactScalar::ratio(-1, 2)).unwrap();
        let c = ThreeLieCoalgebra::from_cobrackets(4, &[(1, t)]).unwrap();
        let text = serialize(&FileObject::Coalgebra(c.clone()));
        assert_eq!(text, "dim 4\ncobracket 1 = -1/2*e2^e3^e4\n");
        assert_eq!(parse(&text).unwrap(), FileObject::Coalgebra(c));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let text = "dim 3\nbracket 1 2 3 = 0*e1\n";
        let FileObject::Algebra(a) = parse(text).unwrap() else {
            panic!("expected algebra");
        };
        assert!(a.is_abelian());
        // a zero bracket on a repeated triple is fine
        assert!(parse("dim 3\nbracket 1 1 2 = 0*e1\n").is_ok());
    }

    #[test]
    fn coalgebra_from_helper_roundtrips() {
        let c = coalgebra_from_int_cobrackets(
            4,
            &[(1, &[(1, (2, 3, 4))]), (2, &[(1, (1, 3, 4)), (2, (1, 2, 3))])],
        );
        let text = serialize(&FileObject::Coalgebra(c.clone()));
        assert_eq!(parse(&text).unwrap(), FileObject::Coalgebra(c));
    }
}
