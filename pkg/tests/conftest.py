from hooklab import Partition


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))
