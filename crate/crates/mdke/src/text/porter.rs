//! Porter suffix-stripping stemmer, original 1980 rule set.
//!
//! Words are measured as `[C](VC)^m[V]` and rewritten through five rule
//! steps. Within a step the longest matching suffix is selected; if its
//! condition fails no rule of that step fires. Words of length 1 or 2 are
//! returned unchanged, matching the reference implementation.

fn is_consonant(w: &[u8], i: usize) -> bool {
    match w[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => false,
        b'y' => i == 0 || !is_consonant(w, i - 1),
        _ => true,
    }
}

/// Number of vowel-consonant sequences in `w`.
fn measure(w: &[u8]) -> usize {
    let mut m = 0;
    let mut prev_vowel = false;
    for i in 0..w.len() {
        let cons = is_consonant(w, i);
        if prev_vowel && cons {
            m += 1;
        }
        prev_vowel = !cons;
    }
    m
}

fn contains_vowel(w: &[u8]) -> bool {
    (0..w.len()).any(|i| !is_consonant(w, i))
}

fn ends_double_consonant(w: &[u8]) -> bool {
    w.len() >= 2 && w[w.len() - 1] == w[w.len() - 2] && is_consonant(w, w.len() - 1)
}

/// consonant-vowel-consonant ending where the final consonant is not w, x, y.
fn ends_cvc(w: &[u8]) -> bool {
    let n = w.len();
    n >= 3
        && is_consonant(w, n - 3)
        && !is_consonant(w, n - 2)
        && is_consonant(w, n - 1)
        && !matches!(w[n - 1], b'w' | b'x' | b'y')
}

enum Cond {
    None,
    MeasureGt(usize),
    /// m > 1 and the stem ends in 's' or 't' (the ION rule).
    MeasureGt1EndsSt,
}

fn cond_holds(cond: &Cond, stem: &[u8]) -> bool {
    match cond {
        Cond::None => true,
        Cond::MeasureGt(k) => measure(stem) > *k,
        Cond::MeasureGt1EndsSt => {
            measure(stem) > 1 && matches!(stem.last(), Some(b's') | Some(b't'))
        }
    }
}

/// Apply the longest-suffix-match rule of a table; no fallback on a failed
/// condition.
fn apply_table(w: &mut Vec<u8>, rules: &[(&[u8], &[u8], Cond)]) -> bool {
    let mut best: Option<&(&[u8], &[u8], Cond)> = None;
    for rule in rules {
        if w.ends_with(rule.0) && best.is_none_or(|b| rule.0.len() > b.0.len()) {
            best = Some(rule);
        }
    }
    let Some((suffix, replacement, cond)) = best else {
        return false;
    };
    let stem_len = w.len() - suffix.len();
    if !cond_holds(cond, &w[..stem_len]) {
        return false;
    }
    w.truncate(stem_len);
    w.extend_from_slice(replacement);
    true
}

fn step_1a(w: &mut Vec<u8>) {
    apply_table(
        w,
        &[
            (b"sses", b"ss", Cond::None),
            (b"ies", b"i", Cond::None),
            (b"ss", b"ss", Cond::None),
            (b"s", b"", Cond::None),
        ],
    );
}

fn step_1b(w: &mut Vec<u8>) {
    if let Some(stem) = w.strip_suffix(b"eed") {
        if measure(stem) > 0 {
            w.truncate(w.len() - 1);
        }
        return;
    }
    let stripped = if let Some(stem) = w.strip_suffix(b"ed") {
        contains_vowel(stem).then(|| w.len() - 2)
    } else if let Some(stem) = w.strip_suffix(b"ing") {
        contains_vowel(stem).then(|| w.len() - 3)
    } else {
        None
    };
    let Some(new_len) = stripped else { return };
    w.truncate(new_len);
    if w.ends_with(b"at") || w.ends_with(b"bl") || w.ends_with(b"iz") {
        w.push(b'e');
    } else if ends_double_consonant(w) && !matches!(w.last(), Some(b'l') | Some(b's') | Some(b'z'))
    {
        w.pop();
    } else if measure(w) == 1 && ends_cvc(w) {
        w.push(b'e');
    }
}

fn step_1c(w: &mut Vec<u8>) {
    if w.ends_with(b"y") && contains_vowel(&w[..w.len() - 1]) {
        let n = w.len();
        w[n - 1] = b'i';
    }
}

fn step_2(w: &mut Vec<u8>) {
    const M0: Cond = Cond::MeasureGt(0);
    apply_table(
        w,
        &[
            (b"ational", b"ate", M0),
            (b"tional", b"tion", M0),
            (b"enci", b"ence", M0),
            (b"anci", b"ance", M0),
            (b"izer", b"ize", M0),
            (b"abli", b"able", M0),
            (b"alli", b"al", M0),
            (b"entli", b"ent", M0),
            (b"eli", b"e", M0),
            (b"ousli", b"ous", M0),
            (b"ization", b"ize", M0),
            (b"ation", b"ate", M0),
            (b"ator", b"ate", M0),
            (b"alism", b"al", M0),
            (b"iveness", b"ive", M0),
            (b"fulness", b"ful", M0),
            (b"ousness", b"ous", M0),
            (b"aliti", b"al", M0),
            (b"iviti", b"ive", M0),
            (b"biliti", b"ble", M0),
        ],
    );
}

fn step_3(w: &mut Vec<u8>) {
    const M0: Cond = Cond::MeasureGt(0);
    apply_table(
        w,
        &[
            (b"icate", b"ic", M0),
            (b"ative", b"", M0),
            (b"alize", b"al", M0),
            (b"iciti", b"ic", M0),
            (b"ical", b"ic", M0),
            (b"ful", b"", M0),
            (b"ness", b"", M0),
        ],
    );
}

fn step_4(w: &mut Vec<u8>) {
    const M1: Cond = Cond::MeasureGt(1);
    apply_table(
        w,
        &[
            (b"al", b"", M1),
            (b"ance", b"", M1),
            (b"ence", b"", M1),
            (b"er", b"", M1),
            (b"ic", b"", M1),
            (b"able", b"", M1),
            (b"ible", b"", M1),
            (b"ant", b"", M1),
            (b"ement", b"", M1),
            (b"ment", b"", M1),
            (b"ent", b"", M1),
            (b"ion", b"", Cond::MeasureGt1EndsSt),
            (b"ou", b"", M1),
            (b"ism", b"", M1),
            (b"ate", b"", M1),
            (b"iti", b"", M1),
            (b"ous", b"", M1),
            (b"ive", b"", M1),
            (b"ize", b"", M1),
        ],
    );
}

fn step_5a(w: &mut Vec<u8>) {
    if w.ends_with(b"e") {
        let stem = &w[..w.len() - 1];
        let m = measure(stem);
        if m > 1 || (m == 1 && !ends_cvc(stem)) {
            w.pop();
        }
    }
}

fn step_5b(w: &mut Vec<u8>) {
    if w.ends_with(b"l") && ends_double_consonant(w) && measure(w) > 1 {
        w.pop();
    }
}

/// Stem a lowercase ASCII-alphabetic word.
///
/// Callers are expected to pre-filter: input must match `[a-z]+`.
pub(crate) fn stem_ascii_lower(word: &str) -> String {
    debug_assert!(word.bytes().all(|b| b.is_ascii_lowercase()));
    if word.len() <= 2 {
        return word.to_string();
    }
    let mut w = word.as_bytes().to_vec();
    step_1a(&mut w);
    step_1b(&mut w);
    step_1c(&mut w);
    step_2(&mut w);
    step_3(&mut w);
    step_4(&mut w);
    step_5a(&mut w);
    step_5b(&mut w);
    String::from_utf8(w).expect("stemming preserves ascii")
}
