import atheris


class EnhancedDataProvider(atheris.FuzzedDataProvider):
    def ConsumeRandomString(self) -> str:
        return self.ConsumeUnicodeNoSurrogates(self.ConsumeIntInRange(0, self.remaining_bytes()))

    def ConsumeWord(self, rank: int, max_length: int = 12) -> list[int]:
        return [self.ConsumeIntInRange(1, rank) for _ in range(self.ConsumeIntInRange(0, max_length))]

    def ConsumeCartanMatrix(self, max_size: int = 3) -> list[list[int]]:
        # Mostly valid matrices: diagonal 2, off-diagonal in -3..0, with the odd bad entry.
        m = self.ConsumeIntInRange(1, max_size)
        rows = [[2 if i == j else -self.ConsumeIntInRange(0, 3) for j in range(m)] for i in range(m)]
        if self.ConsumeProbability() < 0.1:
            rows[self.ConsumeIntInRange(0, m - 1)][self.ConsumeIntInRange(0, m - 1)] = self.ConsumeIntInRange(-4, 4)
        return rows
