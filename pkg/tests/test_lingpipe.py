import pytest

from story2uml.errors import EmptyInput
from story2uml.lingpipe import (DepLabel, PosTag, TaggedSentence, Token,
                                annotate, lemmatize, pos_tag,
                                segment_sentences, tokenize,
                                tokenize_with_spans)


def tags_of(sentence):
    return [(t.text, t.pos.value) for t in sentence.tokens]


def deps_of(sentence):
    return {t.text: t.dep.value for t in sentence.tokens if t.dep is not DepLabel.NONE}


# --- segmentation ---------------------------------------------------------

def test_segment_car_repair_story():
    text = ("A customer calls a car repair shop to make an appointment for an "
            "oil change. The receptionist checks the availability of the "
            "mechanic and schedules the appointment for the next available "
            "time slot.")
    assert len(segment_sentences(text)) == 2


def test_segment_single_sentence():
    assert segment_sentences("I like to read books.") == ["I like to read books."]


def test_segment_suppresses_abbreviations():
    got = segment_sentences("The clerk works for Mr. Smith. He logs hours.")
    assert got == ["The clerk works for Mr. Smith.", "He logs hours."]


def test_segment_multi_dot_abbreviation():
    got = segment_sentences("Use tools e.g. hammers. They help.")
    assert got == ["Use tools e.g. hammers.", "They help."]


def test_segment_covers_every_character():
    text = "A customer pays. The clerk nods! Done?"
    parts = segment_sentences(text)
    assert "".join(parts) == text.replace(" The", "The").replace(" Done", "Done")
    assert [p[-1] for p in parts] == [".", "!", "?"]


def test_segment_empty_raises():
    with pytest.raises(EmptyInput):
        segment_sentences("   ")


def test_segment_requires_capital_after_period():
    got = segment_sentences("The price is 1.5 dollars today. It works.")
    assert len(got) == 2


# --- tokenization ---------------------------------------------------------

def test_tokenize_reading_example():
    assert tokenize("I like to read books") == ["I", "like", "to", "read", "books"]


def test_tokenize_whitespace_split():
    assert tokenize("buy product") == ["buy", "product"]


def test_tokenize_counts_long_sentence():
    text = ("The receptionist checks the availability of the mechanic and "
            "schedules the appointment for the next available time slot.")
    tokens = tokenize(text)
    assert len(tokens) == 19
    assert tokens[-1] == "."
    assert sum(1 for t in tokens if t[0].isalpha()) == 18


def test_tokenize_splits_edge_punctuation():
    assert tokenize('"smart" quotes.') == ['"', "smart", '"', "quotes", "."]
    assert tokenize("(really), yes.") == ["(", "really", ")", ",", "yes", "."]


def test_tokenize_keeps_hyphenated_words():
    assert tokenize("a follow-up visit") == ["a", "follow-up", "visit"]


def test_tokenize_splits_possessive():
    assert tokenize("the customer's order") == ["the", "customer", "'s", "order"]


def test_tokenize_round_trip_with_spans():
    text = 'The clerk said "wait", then left.'
    spans = tokenize_with_spans(text)
    assert [text[a:b] for _, a, b in spans] == [t for t, _, _ in spans]
    rebuilt = []
    last = 0
    for token, start, end in spans:
        assert text[last:start].strip() == ""
        rebuilt.append(text[last:start])
        rebuilt.append(token)
        last = end
    rebuilt.append(text[last:])
    assert "".join(rebuilt) == text


# --- POS tagging ----------------------------------------------------------

def test_tag_closed_class_pronoun(lexicon):
    assert dict(pos_tag(["I"], lexicon))["I"] is PosTag.PRON


def test_tag_lexicon_verb(lexicon):
    assert lexicon.tags["buys"] == "VERB"
    tagged = pos_tag(["The", "customer", "buys"], lexicon)
    assert tagged[2][1] is PosTag.VERB


def test_tag_repair_noun_phrase_object(lexicon):
    tagged = dict(pos_tag("The mechanic performs the oil change .".split(), lexicon))
    assert tagged["change"] is PosTag.NOUN
    assert tagged["performs"] is PosTag.VERB


def test_tag_repair_keeps_subject_position_verb(lexicon):
    tagged = dict(pos_tag("The customer buys a product .".split(), lexicon))
    assert tagged["buys"] is PosTag.VERB


def test_tag_repair_verb_straight_after_determiner(lexicon):
    tagged = dict(pos_tag("the change".split(), lexicon))
    assert tagged["change"] is PosTag.NOUN


def test_tag_infinitival_to_becomes_part(lexicon):
    tagged = pos_tag("to make an appointment".split(), lexicon)
    assert tagged[0][1] is PosTag.PART
    tagged = pos_tag("to the shop".split(), lexicon)
    assert tagged[0][1] is PosTag.ADP


def test_tag_suffix_heuristics(lexicon):
    tagged = dict(pos_tag(["blargly", "blargment", "blargize", "blargous"], lexicon))
    assert tagged["blargly"] is PosTag.ADV
    assert tagged["blargment"] is PosTag.NOUN
    assert tagged["blargize"] is PosTag.VERB
    assert tagged["blargous"] is PosTag.ADJ


def test_tag_capitalized_mid_sentence_unknown_is_propn(lexicon):
    tagged = dict(pos_tag("the clerk helps Smith .".split(), lexicon))
    assert tagged["Smith"] is PosTag.PROPN


def test_tag_sentence_initial_unknown_defaults_to_noun(lexicon):
    tagged = pos_tag("Alice schedules the appointment .".split(), lexicon)
    assert tagged[0][1] is PosTag.NOUN


def test_tag_punctuation_and_numbers(lexicon):
    tagged = dict(pos_tag([".", ",", "5", "1.5"], lexicon))
    assert tagged["."] is PosTag.PUNCT
    assert tagged[","] is PosTag.PUNCT
    assert tagged["5"] is PosTag.NUM
    assert tagged["1.5"] is PosTag.NUM


def test_tag_deterministic(lexicon):
    tokens = "The receptionist checks the availability .".split()
    assert pos_tag(tokens, lexicon) == pos_tag(tokens, lexicon)


# --- lemmatization --------------------------------------------------------

@pytest.mark.parametrize("word,pos,expected", [
    ("Buys", PosTag.VERB, "buy"),
    ("Better", PosTag.ADJ, "good"),
    ("changing", PosTag.VERB, "change"),
])
def test_lemma_reference_rows(word, pos, expected, lexicon):
    assert lemmatize(word, pos, lexicon) == expected


@pytest.mark.parametrize("word,pos,expected", [
    ("checks", PosTag.VERB, "check"),
    ("schedules", PosTag.VERB, "schedule"),
    ("stopped", PosTag.VERB, "stop"),
    ("carries", PosTag.VERB, "carry"),
    ("goes", PosTag.VERB, "go"),
    ("made", PosTag.VERB, "make"),
    ("bought", PosTag.VERB, "buy"),
    ("went", PosTag.VERB, "go"),
    ("stories", PosTag.NOUN, "story"),
    ("boxes", PosTag.NOUN, "box"),
    ("houses", PosTag.NOUN, "house"),
    ("books", PosTag.NOUN, "book"),
    ("children", PosTag.NOUN, "child"),
    ("legs", PosTag.NOUN, "legs"),
])
def test_lemma_suffix_rules(word, pos, expected, lexicon):
    # "legs" stays put: "leg" is not in the lexicon, so stripping fails
    assert lemmatize(word, pos, lexicon) == expected


def test_lemma_unknown_suffix_returns_lowercase(lexicon):
    assert lemmatize("Flibber", PosTag.NOUN, lexicon) == "flibber"


def test_lemma_idempotent_over_lexicon(lexicon):
    for word in sorted(lexicon.entries):
        for pos in (PosTag.NOUN, PosTag.VERB, PosTag.ADJ):
            once = lemmatize(word, pos, lexicon)
            assert lemmatize(once, pos, lexicon) == once, (word, pos)


# --- dependency labeling --------------------------------------------------

def test_dep_simple_transitive(lexicon):
    sentence = annotate("A customer buys a product.", lexicon)[0]
    assert deps_of(sentence) == {"customer": "NSUBJ", "product": "DOBJ"}


def test_dep_coordinated_clause_shares_subject(lexicon):
    sentence = annotate(
        "The receptionist checks the availability of the mechanic and "
        "schedules the appointment for the next available time slot.",
        lexicon)[0]
    assert deps_of(sentence) == {
        "receptionist": "NSUBJ",
        "availability": "DOBJ",
        "appointment": "DOBJ",
    }


def test_dep_strict_skips_infinitive(lexicon):
    sentence = annotate("I like to read books.", lexicon)[0]
    assert deps_of(sentence) == {"I": "NSUBJ"}
    books = [t for t in sentence.tokens if t.text == "books"][0]
    assert books.dep is DepLabel.NONE


def test_dep_infinitive_extension(lexicon):
    sentence = annotate("I like to read books.", lexicon, include_infinitives=True)[0]
    assert deps_of(sentence) == {"I": "NSUBJ", "books": "DOBJ"}


def test_dep_new_subject_after_conjunction(lexicon):
    sentence = annotate("The clerk checks the stock and the manager approves "
                        "the order.", lexicon)[0]
    assert deps_of(sentence) == {
        "clerk": "NSUBJ", "stock": "DOBJ",
        "manager": "NSUBJ", "order": "DOBJ",
    }


def test_dep_object_is_noun_phrase_head(lexicon):
    sentence = annotate("A customer calls a car repair shop to make an "
                        "appointment for an oil change.", lexicon)[0]
    assert deps_of(sentence) == {"customer": "NSUBJ", "shop": "DOBJ"}


def test_dep_at_most_one_subject_and_object_per_clause(lexicon):
    for text in ("The clerk checks the stock and the manager approves the order.",
                 "A waiter takes the order and serves the meal.",
                 "The doctor examines the patient."):
        for sentence in annotate(text, lexicon):
            finite = [i for i, t in enumerate(sentence.tokens)
                      if t.pos is PosTag.VERB
                      and not (i and sentence.tokens[i - 1].pos is PosTag.PART)]
            nsubj = sum(t.dep is DepLabel.NSUBJ for t in sentence.tokens)
            dobj = sum(t.dep is DepLabel.DOBJ for t in sentence.tokens)
            assert nsubj <= len(finite)
            assert dobj <= len(finite)


def test_dep_no_finite_verb_yields_no_labels(lexicon):
    sentence = annotate("The next available time slot.", lexicon)[0]
    assert deps_of(sentence) == {}


def test_dep_labels_only_on_nominals():
    with pytest.raises(ValueError):
        Token(index=0, text="runs", lemma="run", pos=PosTag.VERB, dep=DepLabel.NSUBJ)


def test_token_indices_must_be_contiguous():
    token = Token(index=1, text="a", lemma="a", pos=PosTag.DET)
    with pytest.raises(ValueError):
        TaggedSentence(tokens=(token,), text="a")
