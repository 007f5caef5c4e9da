import json

import pytest

from story2uml import annotate, default_lexicon, extract_model, model_stats
from story2uml.errors import NoActorsFound, UnassignedUseCase
from story2uml.extract import UseCase, UseCaseModel, make_actor, make_use_case
from story2uml.project import model_to_dict


def extract(text, **kwargs):
    return extract_model(annotate(text, default_lexicon(), **kwargs))


def test_simple_story():
    model = extract("A customer buys a product.")
    assert [a.name for a in model.actors] == ["Customer"]
    assert [uc.phrase for uc in model.associations["customer"]] == ["buy product"]


def test_car_repair_story(car_repair_model):
    assert car_repair_model.actor_keys() == ["customer", "receptionist"]
    assert [uc.phrase for uc in car_repair_model.associations["customer"]] == ["call shop"]
    assert [uc.phrase for uc in car_repair_model.associations["receptionist"]] == [
        "check availability", "schedule appointment"]


def test_pronoun_subject_never_creates_actor():
    with pytest.raises(NoActorsFound):
        extract("He buys a product.")


def test_pronoun_keeps_previous_actor_active():
    model = extract("The customer pays the bill. He receives a receipt.")
    assert model.actor_keys() == ["customer"]
    assert [uc.phrase for uc in model.associations["customer"]] == [
        "pay bill", "receive receipt"]


def test_candidate_before_actor_raises_unassigned():
    # first sentence yields an object with no subject; an actor only
    # appears later, so the early candidate has no owner
    with pytest.raises(UnassignedUseCase) as exc_info:
        extract("Opens the account. The clerk checks the balance.")
    assert exc_info.value.candidate.phrase == "open account"
    assert exc_info.value.location is not None


def test_duplicate_phrases_dropped_per_actor():
    model = extract("The clerk checks the stock. The clerk checks the stock.")
    assert [uc.phrase for uc in model.associations["clerk"]] == ["check stock"]


def test_actor_reactivation_not_duplicated():
    model = extract("The clerk checks the stock. The manager approves the order. "
                    "The clerk prints the report.")
    assert model.actor_keys() == ["clerk", "manager"]
    assert [uc.phrase for uc in model.associations["clerk"]] == [
        "check stock", "print report"]


def test_model_stats(car_repair_model):
    assert model_stats(car_repair_model) == (2, 3)
    assert model_stats(extract("A customer buys a product.")) == (1, 1)
    lonely = UseCaseModel(actors=[make_actor("clerk")], associations={"clerk": []})
    assert model_stats(lonely) == (1, 0)


def test_determinism_byte_for_byte():
    text = ("A librarian registers a new member and issues a library card. "
            "The member borrows a book and returns the book after a week.")
    first = json.dumps(model_to_dict(extract(text)))
    second = json.dumps(model_to_dict(extract(text)))
    assert first == second


def test_actor_keys_unique_and_associations_total(car_repair_model):
    keys = car_repair_model.actor_keys()
    assert len(keys) == len(set(keys))
    assert set(car_repair_model.associations) == set(keys)
    car_repair_model.validate()


def test_running_actor_property():
    text = ("A waiter takes the order and serves the meal. "
            "The chef prepares the dish and cleans the kitchen.")
    sentences = annotate(text, default_lexicon())
    model = extract_model(sentences)
    pairs = model.use_cases()
    first_seen = {a.key: a.first_seen for a in model.actors}
    for (key_a, uc_a), (key_b, uc_b) in zip(pairs, pairs[1:]):
        if key_a != key_b:
            # the later actor's subject token must sit between the sources
            assert uc_a.source <= first_seen[key_b] <= uc_b.source


def test_use_case_invariants():
    with pytest.raises(ValueError):
        UseCase(verb_lemma="buy", object_lemma="product",
                phrase="buy  product", source=(0, 0))
    with pytest.raises(ValueError):
        make_use_case("buy", "")
    uc = make_use_case("buy", "product", (0, 2))
    assert uc.phrase == "buy product"


def test_infinitives_extension_adds_use_cases():
    text = "A customer calls a car repair shop to make an appointment for an oil change."
    strict = extract(text)
    extended = extract(text, include_infinitives=True)
    assert [uc.phrase for uc in strict.associations["customer"]] == ["call shop"]
    assert [uc.phrase for uc in extended.associations["customer"]] == [
        "call shop", "make appointment"]
