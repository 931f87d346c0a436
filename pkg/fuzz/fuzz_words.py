import sys

import atheris
from helpers import EnhancedDataProvider

with atheris.instrument_imports():
    from python_renner.cartan import complete_realization, validate_gcm
    from python_renner.coxeter import WeylGroup

groups = [
    WeylGroup(complete_realization(validate_gcm([[2, -1], [-1, 2]]))),
    WeylGroup(complete_realization(validate_gcm([[2, -2], [-2, 2]]))),
    WeylGroup(complete_realization(validate_gcm([[2, -1, 0], [-1, 2, -2], [0, -2, 2]]))),
]


def TestOneInput(data: bytes) -> None:
    fdp = EnhancedDataProvider(data)
    group = fdp.PickValueInList(groups)
    first = group.element(fdp.ConsumeWord(group.rank))
    second = group.element(fdp.ConsumeWord(group.rank))

    assert group.multiply(first, group.inverse(first)).is_identity
    assert group.element(first.word) == first
    product = group.multiply(first, second)
    assert product.length <= first.length + second.length
    assert (product.length - first.length - second.length) % 2 == 0


def main():
    atheris.Setup(sys.argv, TestOneInput)
    atheris.Fuzz()


if __name__ == "__main__":
    main()
