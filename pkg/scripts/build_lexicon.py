#!/usr/bin/env python3
"""Regenerate src/story2uml/data/lexicon.tsv.

Verb families expand into base/-s/-ing/-ed rows with regular English
morphology; nouns expand into singular/plural pairs.  Hand-picked tag
overrides cover forms whose most frequent reading differs from their
family (e.g. "issues" as a verb beside the noun "issue").
"""

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "story2uml" / "data" / "lexicon.tsv"

VOWELS = "aeiou"

# verbs that double their final consonant before -ing/-ed
DOUBLING = {"log", "stop", "ship", "scan", "drop", "swap", "plan", "submit",
            "transfer", "admit", "refer", "chat"}

# (base, frequency); -s/-ing/-ed forms generated unless the form is listed
# in SKIP_FORMS (irregular pasts live in the lemma exceptions table).
VERBS = [
    ("call", 9000), ("check", 8000), ("schedule", 5000), ("make", 9500),
    ("buy", 7000), ("read", 6000), ("like", 8500), ("work", 8000),
    ("log", 3000), ("pay", 7000), ("cancel", 4000), ("register", 4000),
    ("update", 5000), ("delete", 3500), ("create", 5000), ("view", 4000),
    ("search", 4500), ("browse", 3000), ("send", 6000), ("receive", 5000),
    ("approve", 3500), ("reject", 3000), ("confirm", 3500), ("verify", 3000),
    ("reserve", 2500), ("borrow", 2500), ("return", 4000), ("renew", 2000),
    ("track", 3000), ("deliver", 3500), ("ship", 2500), ("collect", 3000),
    ("print", 3000), ("download", 2500), ("upload", 2200), ("assign", 2500),
    ("enroll", 1800), ("attend", 2200), ("teach", 2500), ("write", 5000),
    ("prepare", 3000), ("serve", 3000), ("cook", 2000), ("clean", 2500),
    ("manage", 3000), ("generate", 2500), ("open", 4000), ("close", 3500),
    ("edit", 2500), ("save", 4000), ("add", 5000), ("remove", 3500),
    ("select", 3000), ("choose", 3000), ("fill", 2500), ("sign", 3000),
    ("notify", 2000), ("remind", 1800), ("measure", 2000), ("inspect", 1800),
    ("replace", 2500), ("fix", 2500), ("provide", 3500), ("install", 2500),
    ("drive", 3000), ("park", 1800), ("rent", 1800), ("scan", 2000),
    ("weigh", 1500), ("pack", 1800), ("load", 2000), ("unload", 1200),
    ("charge", 2200), ("apply", 3000), ("submit", 3000), ("accept", 3000),
    ("decline", 1500), ("forward", 1500), ("escalate", 1200), ("resolve", 2000),
    ("assist", 1800), ("help", 4000), ("greet", 1500), ("take", 6000),
    ("bring", 2500), ("give", 5000), ("get", 6000), ("find", 4000),
    ("show", 3500), ("display", 2500), ("handle", 2200), ("hold", 2500),
    ("keep", 3000), ("start", 3500), ("finish", 2500), ("complete", 3000),
    ("begin", 2500), ("stop", 2500), ("continue", 2500), ("monitor", 1800),
    ("operate", 1800), ("maintain", 2000), ("analyze", 1800),
    ("calculate", 2000), ("compute", 1500), ("count", 2000), ("export", 1500),
    ("restore", 1500), ("reset", 1800), ("unlock", 1200), ("lock", 1500),
    ("enter", 3000), ("exit", 1500), ("move", 3000), ("copy", 2000),
    ("publish", 1800), ("subscribe", 1500), ("follow", 2500), ("share", 2500),
    ("reply", 1500), ("wait", 2500), ("arrive", 2000), ("depart", 1200),
    ("visit", 2500), ("stay", 2000), ("host", 1200), ("invite", 1800),
    ("join", 2200), ("hire", 1500), ("evaluate", 1500), ("interview", 1500),
    ("promote", 1200), ("transfer", 1800), ("deposit", 1500),
    ("withdraw", 1500), ("lend", 1000), ("owe", 800), ("earn", 1500),
    ("spend", 2000), ("invest", 1200), ("insure", 800), ("cover", 2000),
    ("settle", 1200), ("request", 3000), ("want", 4000), ("need", 3000),
    ("drop", 2000), ("examine", 1800), ("treat", 1800), ("prescribe", 1200),
    ("admit", 1500), ("discharge", 1200), ("restock", 800), ("audit", 1000),
    ("restart", 1000), ("configure", 1200), ("validate", 1200),
    ("redeem", 800), ("extend", 1500), ("archive", 1000), ("swipe", 800),
    ("change", 5000), ("use", 5000), ("go", 5000), ("say", 4000),
    ("see", 4500), ("come", 3500), ("leave", 2000), ("meet", 2000),
    ("sell", 2500), ("tell", 2500), ("think", 3000), ("know", 3500),
    ("perform", 2000), ("decide", 2500), ("plan", 2000), ("review", 2200),
    ("report", 2000), ("refund", 1200), ("dispute", 800), ("claim", 1400),
    ("rate", 1200), ("grade", 1200), ("book", 1000), ("order", 1600),
    ("fly", 1500), ("carry", 2000),
]

# 3sg forms that are irregular or worth pinning explicitly
EXPLICIT_S = {"go": "goes", "do": "does"}

# generated forms to drop because another reading should win, or the
# inflection is irregular and lives in the exceptions table instead
SKIP_FORMS = {
    "bought", "made", "took", "gave", "got", "found", "held", "kept",
    "sent", "spent", "lent", "paid", "said", "saw", "wrote", "taught",
    "chose", "drove", "flew", "began", "withdrew", "came", "left", "met",
    "sold", "told", "thought", "knew", "went",
    # forms whose noun reading should win the tag
    "books", "reviews", "reports", "orders", "claims", "rates", "grades",
    "readed", "teached", "taked", "maked", "gived", "getted", "finded",
    "helded", "keeped", "buyed", "payed", "sended", "spended", "lended",
    "goed", "sayed", "seed", "comed", "leaved", "meeted", "selled",
    "telled", "thinked", "knowed", "writed", "choosed", "flyed", "beginned",
    "withdrawed", "holded",
}

# surface forms whose majority tag differs from their family's tag
TAG_OVERRIDES = {
    "books": "NOUN", "reviews": "NOUN", "reports": "NOUN", "orders": "NOUN",
    "claims": "NOUN", "rates": "NOUN", "grades": "NOUN",
    "issues": "VERB", "processes": "VERB", "records": "VERB",
    "repairs": "VERB", "files": "VERB", "tests": "VERB",
}

NOUNS = [
    ("customer", 8000), ("product", 6000), ("car", 5000), ("appointment", 4000),
    ("oil", 3000), ("receptionist", 2000), ("availability", 2500),
    ("mechanic", 2000), ("time", 9000), ("slot", 1500), ("shop", 3000),
    ("library", 2500), ("librarian", 1500), ("member", 3000), ("card", 3000),
    ("loan", 2000), ("payment", 3500), ("invoice", 2000), ("report", 3500),
    ("system", 4000), ("password", 2500), ("profile", 2200), ("cart", 1800),
    ("item", 3500), ("catalog", 1800), ("stock", 2000), ("inventory", 1800),
    ("warehouse", 1500), ("supplier", 1500), ("delivery", 2000),
    ("driver", 2000), ("package", 2000), ("parcel", 1200), ("address", 2500),
    ("email", 3500), ("notification", 1500), ("message", 3000),
    ("student", 3500), ("teacher", 2500), ("course", 2500), ("lesson", 1800),
    ("assignment", 1800), ("exam", 2000), ("patient", 3000), ("doctor", 3000),
    ("nurse", 2000), ("prescription", 1500), ("pharmacist", 1000),
    ("medicine", 2000), ("clinic", 1500), ("waiter", 1200), ("chef", 1500),
    ("menu", 1800), ("meal", 2000), ("dish", 1500), ("reservation", 1500),
    ("table", 3000), ("bill", 2500), ("guest", 2000), ("room", 3000),
    ("hotel", 2200), ("booking", 1500), ("ticket", 2500), ("flight", 2200),
    ("passenger", 1800), ("seat", 2000), ("agent", 2000), ("policy", 2000),
    ("refund", 1500), ("review", 2500), ("rating", 1200), ("feedback", 1500),
    ("status", 2000), ("date", 2800), ("week", 3000), ("day", 4000),
    ("staff", 2000), ("employee", 2500), ("salary", 1500), ("form", 2500),
    ("document", 2500), ("folder", 1200), ("photo", 1800), ("video", 2000),
    ("list", 2800), ("task", 2200), ("project", 2500), ("team", 2500),
    ("meeting", 2200), ("note", 2000), ("comment", 1800), ("post", 1800),
    ("article", 1800), ("page", 2500), ("website", 2000), ("cashier", 1200),
    ("receipt", 1500), ("store", 2500), ("barcode", 800), ("scanner", 800),
    ("money", 3000), ("cash", 2000), ("coupon", 1000), ("discount", 1500),
    ("cost", 2500), ("amount", 2200), ("fee", 1500), ("tax", 1800),
    ("summary", 1500), ("detail", 1500), ("result", 2200), ("quiz", 800),
    ("technician", 1200), ("engineer", 1800), ("vehicle", 2000),
    ("part", 2800), ("tire", 1200), ("brake", 1000), ("engine", 1800),
    ("service", 3000), ("garage", 1200), ("account", 3500), ("user", 3000),
    ("manager", 2500), ("admin", 1500), ("administrator", 1200),
    ("clerk", 1500), ("hour", 2800), ("shift", 1200), ("order", 4000),
    ("book", 4000), ("record", 2000), ("process", 2200), ("issue", 2000),
    ("grade", 1500), ("test", 2500), ("file", 2200), ("claim", 1800),
    ("end", 2500), ("estimate", 1500), ("dispute", 1000), ("rate", 2000),
    ("shipment", 1500), ("sender", 1000), ("receiver", 1000),
    ("courier", 1200), ("tracking", 1000), ("number", 3000),
    ("confirmation", 1500), ("agreement", 1800), ("application", 2500),
    ("applicant", 1500), ("officer", 2000), ("branch", 1800), ("bank", 2500),
    ("accountant", 1200), ("kitchen", 1800), ("desk", 1500), ("lobby", 1000),
    ("key", 2000), ("luggage", 1200), ("gate", 1500), ("departure", 1200),
    ("arrival", 1200), ("quote", 800), ("thing", 2500), ("way", 3000),
    ("name", 3000), ("word", 2500), ("sentence", 1500), ("story", 2200),
    ("diagram", 1200), ("model", 2000), ("actor", 1500), ("case", 2800),
    ("tool", 1800), ("code", 2000), ("line", 2500), ("text", 2200),
    ("person", 2800), ("man", 2500), ("woman", 2200), ("child", 2200),
    ("friend", 2200), ("family", 2500), ("home", 3000), ("house", 2800),
    ("school", 2800), ("city", 2500), ("country", 2200), ("company", 2800),
    ("business", 2500), ("job", 2500), ("world", 2500), ("year", 3500),
    ("month", 2500), ("minute", 1800), ("morning", 1800), ("evening", 1500),
    ("night", 2200), ("repair", 2500), ("mr", 2000), ("mrs", 1500),
    ("ms", 1200), ("dr", 1500), ("total", 1500), ("balance", 1500),
    ("interest", 1500), ("complaint", 1200), ("answer", 1800),
    ("question", 2200), ("login", 1000), ("dashboard", 800), ("setting", 1200),
    ("option", 1500), ("entry", 1200), ("field", 1500), ("label", 1000),
    ("chart", 1000), ("figure", 1200), ("survey", 1200), ("response", 1500), ("box", 1500),
]

# nouns with no plural row (mass nouns, already plural, or the plural
# would shadow a verb form we need)
NO_PLURAL = {"oil", "availability", "stock", "inventory", "money", "cash",
             "staff", "luggage", "feedback", "status", "tracking", "mr",
             "mrs", "ms", "dr", "interest", "man", "woman", "child",
             "person", "medicine", "total", "end", "repair", "login"}

# irregular plurals live in the lemma exceptions table, not here
ADJECTIVES = [
    ("available", 2500), ("next", 4000), ("new", 5000), ("old", 3000),
    ("big", 2500), ("small", 2500), ("large", 2200), ("good", 4000),
    ("bad", 2000), ("early", 2200), ("late", 2000), ("quick", 1500),
    ("slow", 1200), ("fast", 1800), ("free", 2500), ("busy", 1500),
    ("full", 2000), ("empty", 1200), ("high", 2800), ("low", 2200),
    ("hot", 1500), ("cold", 1500), ("daily", 1500), ("weekly", 1200),
    ("monthly", 1200), ("annual", 1200), ("final", 1800), ("first", 3500),
    ("last", 3000), ("online", 2000), ("digital", 1500), ("automatic", 1200),
    ("previous", 1500), ("current", 2000), ("medical", 1800), ("dental", 800),
    ("regular", 1500), ("special", 1800), ("standard", 1500),
    ("premium", 800), ("basic", 1200), ("advanced", 1000), ("simple", 1500),
    ("complex", 800), ("important", 2000), ("urgent", 1000), ("valid", 1200),
    ("invalid", 600), ("active", 1500), ("inactive", 500), ("ready", 1800),
    ("due", 1500), ("overdue", 700), ("pending", 900), ("several", 1200),
    ("smart", 1500), ("extra", 1000), ("main", 1500), ("wrong", 1500),
    ("right", 2200), ("long", 2500), ("short", 2000),
]

ADVERBS = [
    ("quickly", 1500), ("slowly", 800), ("carefully", 900), ("manually", 600),
    ("automatically", 900), ("immediately", 1200), ("already", 1800),
    ("also", 3000), ("always", 2200), ("never", 2000), ("often", 1800),
    ("usually", 1500), ("soon", 1500), ("later", 1800), ("now", 3000),
    ("here", 2500), ("there", 2800), ("again", 2200), ("together", 1200),
    ("too", 2500), ("well", 2500), ("not", 5000), ("very", 3500),
    ("then", 3000), ("once", 1500), ("instead", 1200), ("however", 1500),
    ("perhaps", 1000), ("maybe", 1200), ("more", 3000), ("most", 2500),
    ("today", 2000), ("tomorrow", 1500), ("yesterday", 1200),
]

NUMERALS = [
    ("one", 5000), ("two", 4000), ("three", 3500), ("four", 3000),
    ("five", 3000), ("six", 2500), ("seven", 2200), ("eight", 2200),
    ("nine", 2000), ("ten", 2000), ("twenty", 1200), ("hundred", 1500),
    ("thousand", 1200),
]


def s_form(base: str) -> str:
    if base in EXPLICIT_S:
        return EXPLICIT_S[base]
    if base.endswith(("s", "x", "z", "ch", "sh")):
        return base + "es"
    if base.endswith("y") and base[-2] not in VOWELS:
        return base[:-1] + "ies"
    return base + "s"


def ing_form(base: str) -> str:
    if base in DOUBLING:
        return base + base[-1] + "ing"
    if base.endswith("e") and not base.endswith(("ee", "ye", "oe")):
        return base[:-1] + "ing"
    return base + "ing"


def ed_form(base: str) -> str:
    if base in DOUBLING:
        return base + base[-1] + "ed"
    if base.endswith("e"):
        return base + "d"
    if base.endswith("y") and base[-2] not in VOWELS:
        return base[:-1] + "ied"
    return base + "ed"


def plural(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    return noun + "s"


def main() -> None:
    rows: dict[str, tuple[int, str]] = {}

    def put(word: str, freq: int, tag: str) -> None:
        if word in SKIP_FORMS:
            return
        tag = TAG_OVERRIDES.get(word, tag)
        if word not in rows or rows[word][0] < freq:
            rows[word] = (freq, tag)

    for base, freq in VERBS:
        put(base, freq, "VERB")
        put(s_form(base), freq // 2, "VERB")
        put(ing_form(base), freq // 3, "VERB")
        put(ed_form(base), freq // 3, "VERB")
    for noun, freq in NOUNS:
        put(noun, freq, "NOUN")
        if noun not in NO_PLURAL:
            put(plural(noun), freq // 2, "NOUN")
    for word, freq in ADJECTIVES:
        put(word, freq, "ADJ")
    for word, freq in ADVERBS:
        put(word, freq, "ADV")
    for word, freq in NUMERALS:
        put(word, freq, "NUM")
    # tag overrides that never came up in a family
    for word, tag in TAG_OVERRIDES.items():
        if word in rows and rows[word][1] != tag:
            rows[word] = (rows[word][0], tag)

    lines = ["# word<TAB>frequency<TAB>most-frequent-tag"]
    for word in sorted(rows):
        freq, tag = rows[word]
        lines.append(f"{word}\t{freq}\t{tag}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} entries to {OUT}")


if __name__ == "__main__":
    main()
