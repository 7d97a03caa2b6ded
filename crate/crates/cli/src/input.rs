//! Integer lists accepted by `--rho` and `--svg-axes`.

use git_instab::{Error, Result};

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// `2,-1,-1` or `[2,-1,-1]`.
pub fn parse_integers(text: &str) -> Result<Vec<i64>> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix('[') {
        Some(inner) => (
            inner.strip_suffix(']').unwrap_or(inner),
            text.find('[').unwrap_or(0) + 1,
        ),
        None => (trimmed, text.len() - text.trim_start().len()),
    };
    let mut out = Vec::new();
    let mut offset = base;
    for piece in body.split(',') {
        let v = piece
            .trim()
            .parse::<i64>()
            .map_err(|_| parse_error(offset, format!("expected an integer, found {:?}", piece.trim())))?;
        out.push(v);
        offset += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_lists() {
        assert_eq!(parse_integers("[2,-1,-1]").unwrap(), vec![2, -1, -1]);
        assert_eq!(parse_integers(" 1, -1").unwrap(), vec![1, -1]);
        assert!(parse_integers("1,a").is_err());
    }
}
