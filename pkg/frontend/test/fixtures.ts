// Captured verbatim from the HTTP service so the mocked wire
// format in these tests cannot drift from the real one.
export const fixtures = {
  "created": {
    "project_id": "c17dc0beb269434c941965b4eb4877e7",
    "result": {
      "story": "A customer buys a product.",
      "corrected_text": "A customer buys a product.",
      "report": {
        "replacements": [],
        "untouched_unknown": []
      },
      "sentences": [
        {
          "text": "A customer buys a product.",
          "tokens": [
            {
              "index": 0,
              "text": "A",
              "lemma": "a",
              "pos": "DET",
              "dep": "NONE",
              "sentence_index": 0
            },
            {
              "index": 1,
              "text": "customer",
              "lemma": "customer",
              "pos": "NOUN",
              "dep": "NSUBJ",
              "sentence_index": 0
            },
            {
              "index": 2,
              "text": "buys",
              "lemma": "buy",
              "pos": "VERB",
              "dep": "NONE",
              "sentence_index": 0
            },
            {
              "index": 3,
              "text": "a",
              "lemma": "a",
              "pos": "DET",
              "dep": "NONE",
              "sentence_index": 0
            },
            {
              "index": 4,
              "text": "product",
              "lemma": "product",
              "pos": "NOUN",
              "dep": "DOBJ",
              "sentence_index": 0
            },
            {
              "index": 5,
              "text": ".",
              "lemma": ".",
              "pos": "PUNCT",
              "dep": "NONE",
              "sentence_index": 0
            }
          ]
        }
      ],
      "raw_model": {
        "system_name": "System",
        "actors": [
          {
            "name": "Customer",
            "key": "customer",
            "first_seen": [
              0,
              1
            ]
          }
        ],
        "associations": {
          "customer": [
            {
              "verb_lemma": "buy",
              "object_lemma": "product",
              "phrase": "buy product",
              "source": [
                0,
                2
              ]
            }
          ]
        }
      },
      "filtered_model": {
        "system_name": "System",
        "actors": [
          {
            "name": "Customer",
            "key": "customer",
            "first_seen": [
              0,
              1
            ]
          }
        ],
        "associations": {
          "customer": [
            {
              "verb_lemma": "buy",
              "object_lemma": "product",
              "phrase": "buy product",
              "source": [
                0,
                2
              ]
            }
          ]
        }
      },
      "dropped": [],
      "plantuml": "@startuml\nleft to right direction\nactor \"Customer\" as Cu\nrectangle {\n    usecase \"buy product\" as UC1\n}\nCu --> UC1\n@enduml\n",
      "diagnostics": []
    },
    "revision": 0
  },
  "snapshot": {
    "result": {
      "story": "A customer buys a product.",
      "corrected_text": "A customer buys a product.",
      "report": {
        "replacements": [],
        "untouched_unknown": []
      },
      "sentences": [
        {
          "text": "A customer buys a product.",
          "tokens": [
            {
              "index": 0,
              "text": "A",
              "lemma": "a",
              "pos": "DET",
              "dep": "NONE",
              "sentence_index": 0
            },
            {
              "index": 1,
              "text": "customer",
              "lemma": "customer",
              "pos": "NOUN",
              "dep": "NSUBJ",
              "sentence_index": 0
            },
            {
              "index": 2,
              "text": "buys",
              "lemma": "buy",
              "pos": "VERB",
              "dep": "NONE",
              "sentence_index": 0
            },
            {
              "index": 3,
              "text": "a",
              "lemma": "a",
              "pos": "DET",
              "dep": "NONE",
              "sentence_index": 0
            },
            {
              "index": 4,
              "text": "product",
              "lemma": "product",
              "pos": "NOUN",
              "dep": "DOBJ",
              "sentence_index": 0
            },
            {
              "index": 5,
              "text": ".",
              "lemma": ".",
              "pos": "PUNCT",
              "dep": "NONE",
              "sentence_index": 0
            }
          ]
        }
      ],
      "raw_model": {
        "system_name": "System",
        "actors": [
          {
            "name": "Customer",
            "key": "customer",
            "first_seen": [
              0,
              1
            ]
          }
        ],
        "associations": {
          "customer": [
            {
              "verb_lemma": "buy",
              "object_lemma": "product",
              "phrase": "buy product",
              "source": [
                0,
                2
              ]
            }
          ]
        }
      },
      "filtered_model": {
        "system_name": "System",
        "actors": [
          {
            "name": "Customer",
            "key": "customer",
            "first_seen": [
              0,
              1
            ]
          }
        ],
        "associations": {
          "customer": [
            {
              "verb_lemma": "buy",
              "object_lemma": "product",
              "phrase": "buy product",
              "source": [
                0,
                2
              ]
            }
          ]
        }
      },
      "dropped": [],
      "plantuml": "@startuml\nleft to right direction\nactor \"Customer\" as Cu\nrectangle {\n    usecase \"buy product\" as UC1\n}\nCu --> UC1\n@enduml\n",
      "diagnostics": []
    },
    "revision": 0
  },
  "plantuml": "@startuml\nleft to right direction\nactor \"Customer\" as Cu\nrectangle {\n    usecase \"buy product\" as UC1\n}\nCu --> UC1\n@enduml\n",
  "renamed": {
    "model": {
      "system_name": "System",
      "actors": [
        {
          "name": "Client",
          "key": "client",
          "first_seen": [
            0,
            1
          ]
        }
      ],
      "associations": {
        "client": [
          {
            "verb_lemma": "buy",
            "object_lemma": "product",
            "phrase": "buy product",
            "source": [
              0,
              2
            ]
          }
        ]
      }
    },
    "plantuml": "@startuml\nleft to right direction\nactor \"Client\" as Cl\nrectangle {\n    usecase \"buy product\" as UC1\n}\nCl --> UC1\n@enduml\n",
    "revision": 1
  },
  "conflictStatus": 409,
  "conflictBody": {
    "code": "revision_conflict",
    "message": "request expected revision 0, but the project is at revision 1"
  }
} as const;
