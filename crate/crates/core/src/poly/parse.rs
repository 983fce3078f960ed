use super::coeff::Coeff;
use super::polynomial::Polynomial;

/// Parses a polynomial in the variables `names`.
///
/// Grammar: `expr := ['+'|'-'] term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := atom ['^' int]`, `atom := int ['/' int] | ident | '(' expr ')'`.
/// Whitespace is insignificant. Errors carry a character offset.
pub fn parse_polynomial(input: &str, names: &[String]) -> Result<Polynomial, String> {
    let mut p = Parser {
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        names,
    };
    if p.chars.is_empty() {
        return Err("empty polynomial".into());
    }
    let e = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(format!("unexpected `{}` at offset {}", p.chars[p.pos], p.pos));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial, String> {
        let mut acc = Polynomial::zero(self.n());
        let mut sign = 1;
        match self.peek() {
            Some('-') => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial, String> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, String> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.parse().map_err(|_| format!("bad exponent `{e}`"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String, String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some(c) => format!("expected a number at offset {start}, found `{c}`"),
                None => "expected a number at end of input".into(),
            });
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<Polynomial, String> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let mut lit = self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    lit.push('/');
                    lit.push_str(&self.integer()?);
                }
                let c: Coeff = lit.parse()?;
                Ok(Polynomial::constant(self.n(), c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_' || c == '\'') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.names.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::variable(self.n(), i)),
                    None => Err(format!("unknown variable `{name}`")),
                }
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(format!("expected `)` at offset {}", self.pos));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => Err(format!("unexpected `{c}` at offset {}", self.pos)),
            None => Err("unexpected end of input".into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_grammar_examples() {
        let n = names(&["x1", "x2"]);
        let p = parse_polynomial("x2^2 - x1^3", &n).unwrap();
        assert_eq!(p.display(&n), "x2^2 - x1^3");
        let q = parse_polynomial(" -1/2 * x1*x2 + 3 x1 ".replace(' ', "").as_str(), &n);
        assert!(q.is_err(), "juxtaposition is not multiplication");
        let q = parse_polynomial("-1/2*x1*x2 + 3*x1", &n).unwrap();
        assert_eq!(q.display(&n), "3*x1 - 1/2*x1*x2");
        let r = parse_polynomial("(x1 + x2)^2 - 2*x1*x2", &n).unwrap();
        assert_eq!(r.display(&n), "x1^2 + x2^2");
    }

    #[test]
    fn rejects_garbage() {
        let n = names(&["x"]);
        assert!(parse_polynomial("y", &n).is_err());
        assert!(parse_polynomial("x^", &n).is_err());
        assert!(parse_polynomial("", &n).is_err());
        assert!(parse_polynomial("1/0", &n).is_err());
        assert!(parse_polynomial("x +", &n).is_err());
    }
}
