from krasner.constructions import builtin, quotient_corpus, valid_catalogue
from krasner.core import validate

CORPUS = ([validate(builtin(n)) for n in valid_catalogue()]
          + [validate(s) for s in quotient_corpus()])
SMALL = [R for R in CORPUS if R.n <= 8]


def ids(rings):
    return [R.name for R in rings]
