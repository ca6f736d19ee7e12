"""The 1000 bit/s, 1 % error line as three different rates."""

from qecfom.classical import shannon_example

r = shannon_example(1000, 0.01)
print(f"information lost to equivocation : {r.equivocation_rate:.2f} bit/s")
print(f"bits matching after random fill  : {r.similarity_strategy_matches:.0f} bit/s")
print(f"bits discarded when tagged       : {r.erasure_loss:.0f} bit/s")
