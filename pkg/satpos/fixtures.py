"""
Published parameter tuples and printed values for the reproduction commands.

Printed rationals are kept verbatim, including the float-interpolation noise
of the original tables; comparisons against them use a tolerance.
"""
from typing import List, Tuple

from pydantic import BaseModel, Field


class KroneckerRow(BaseModel):
    """Two-row Kronecker stretching function with its printed constituents and rational function."""
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    pi: Tuple[int, ...]
    odd: List[str] = Field(..., description="Ascending coefficients for odd n")
    even: List[str] = Field(..., description="Ascending coefficients for even n")
    printed_h: List[int]
    printed_den: List[Tuple[int, int]] = Field(..., description="Printed (a, mult) factors of the denominator")
    acceptance: bool = False


FKRON1: List[KroneckerRow] = [
    KroneckerRow(lam=(87, 62), mu=(97, 52), pi=(64, 39, 24, 22),
                 odd=["1/2", "4", "11/2"], even=["1", "4", "11/2"],
                 printed_h=[1, 8, 11, 2], printed_den=[(1, 2), (2, 1)], acceptance=True),
    KroneckerRow(lam=(104, 95), mu=(149, 50), pi=(95, 78, 15, 11),
                 odd=["1/2", "13/2", "18"], even=["1", "13/2", "18"],
                 printed_h=[1, 23, 36, 12], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(101, 85), mu=(102, 84), pi=(78, 72, 24, 12),
                 odd=["0", "17/2", "71/2"], even=["1", "17/2", "71/2"],
                 printed_h=[1, 42, 72, 27], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(79, 63), mu=(93, 49), pi=(88, 37, 14, 3),
                 odd=["3/4", "27/2", "303/4"], even=["1", "27/2", "303/4"],
                 printed_h=[1, 88, 151, 63], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(97, 93), mu=(114, 76), pi=(77, 66, 47),
                 odd=["1/2", "15/2", "21"], even=["1", "15/2", "21"],
                 printed_h=[1, 27, 42, 14], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(88, 56), mu=(113, 31), pi=(99, 35, 7, 3),
                 odd=["1/2", "11/2", "10"], even=["1", "11/2", "10"],
                 printed_h=[1, 14, 20, 5], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(134, 82), mu=(140, 76), pi=(91, 72, 49, 4),
                 odd=["3/4", "21", "669/4"], even=["1", "21", "669/4"],
                 printed_h=[1, 187, 334, 147], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(133, 69), mu=(149, 53), pi=(98, 55, 43, 6),
                 odd=["1", "6", "8"], even=["1", "6", "8"],
                 printed_h=[1, 13, 15, 3], printed_den=[(1, 3)]),
    KroneckerRow(lam=(80, 63), mu=(111, 32), pi=(88, 38, 10, 7),
                 odd=["1"], even=["1"],
                 printed_h=[1, 1], printed_den=[(1, 1)], acceptance=True),
    KroneckerRow(lam=(118, 69), mu=(151, 36), pi=(95, 63, 20, 9),
                 odd=["1", "4", "4"], even=["1", "4", "4"],
                 printed_h=[1, 7, 7, 1], printed_den=[(1, 3)]),
    KroneckerRow(lam=(96, 51), mu=(103, 44), pi=(90, 53, 3, 1),
                 odd=["1/2", "39/2", "36"], even=["1", "39/2", "36"],
                 printed_h=[1, 54, 72, 17], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(117, 72), mu=(133, 56), pi=(82, 57, 41, 9),
                 odd=["1", "9", "18"], even=["1", "9", "18"],
                 printed_h=[1, 26, 35, 10], printed_den=[(1, 3)]),
    KroneckerRow(lam=(72, 63), mu=(77, 58), pi=(49, 38, 28, 20),
                 odd=["1/2", "7", "55/2"], even=["1", "7", "55/2"],
                 printed_h=[1, 33, 55, 21], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(48, 37), mu=(49, 36), pi=(34, 24, 16, 11),
                 odd=["1/2", "6", "37/2"], even=["1", "6", "37/2"],
                 printed_h=[1, 23, 37, 13], printed_den=[(1, 2), (2, 1)]),
    KroneckerRow(lam=(108, 56), mu=(113, 51), pi=(73, 50, 29, 12),
                 odd=["1", "4", "4"], even=["1", "4", "4"],
                 printed_h=[1, 7, 7, 1], printed_den=[(1, 3)], acceptance=True),
]


class GPHilbertRow(BaseModel):
    """Hilbert polynomial of G/P_lam for SL_k, printed coefficients in descending degree."""
    k: int
    lam: Tuple[int, ...]
    printed: List[str]
    tolerance: float = Field(1e-6, description="Allowed |printed - exact| relative to max(1, |exact|)")
    printed_reliable: bool = True
    acceptance: bool = False


FGMODP: List[GPHilbertRow] = [
    GPHilbertRow(k=3, lam=(21, 19),
                 printed=["399", "35527969472513/137438953472", "4329327034365/137438953472", "1"],
                 acceptance=True),
    GPHilbertRow(k=5, lam=(21, 19),
                 printed=["3700378042361/4194304", "575575719967/524288", "2157156441/4096",
                          "266554253/2048", "4643843/256", "1468423/1024", "7619/128", "1"],
                 printed_reliable=False),
    GPHilbertRow(k=3, lam=(21, 9, 6),
                 printed=["270", "40819369181185/274877906944", "3092376453119/137438953472", "1"]),
    GPHilbertRow(k=3, lam=(12, 9, 5),
                 printed=["42", "40132174413825/1099511627776", "11544872091645/1099511627776", "1"],
                 acceptance=True),
    GPHilbertRow(k=3, lam=(21, 19, 16),
                 printed=["15", "81363860455425/4398046511104", "8246337208319/1099511627776", "1"]),
    GPHilbertRow(k=4, lam=(9, 7, 5),
                 printed=["7215545057279/17179869184", "4183298146289/4294967296", "247765925897/268435456",
                          "1914699777/4194304", "4160749567/33554432", "587202553/33554432",
                          "67108863/67108864"], tolerance=1e-4),
    GPHilbertRow(k=4, lam=(21, 12, 9),
                 printed=["16437913583613/268435456", "132498063359/2097152", "109509083155/4194304",
                          "1462763527/262144", "171442179/262144", "10485755/262144", "524287/524288"],
                 tolerance=1e-4),
    GPHilbertRow(k=4, lam=(21, 9, 5),
                 printed=["32469952757755/536870912", "129805320191/2097152", "108129157137/4194304",
                          "2926313487/524288", "86638593/131072", "10616825/262144", "262143/262144"],
                 tolerance=1e-4),
    GPHilbertRow(k=4, lam=(21, 9, 6),
                 printed=["27396522639355/536870912", "463063744509/8388608", "6265700353/262144",
                          "5577375771/1048576", "84246529/131072", "20971505/524288", "1048573/1048576"],
                 tolerance=1e-4),
    GPHilbertRow(k=4, lam=(31, 19, 5),
                 printed=["35969680015355/33554432", "1424674346311/2097152", "22705493343/131072",
                          "46973953/2048", "3423915/2048", "65365/1024", "16383/16384"],
                 tolerance=1e-4),
]


class SymInvTable(BaseModel):
    """Hilbert quasi-polynomial of the symmetric invariants in k variables, one row per residue."""
    k: int
    constituents: List[List[str]] = Field(..., description="Ascending coefficients, residue 1 first")
    tolerance: float = 0.0
    acceptance: bool = True


FSYM: List[SymInvTable] = [
    SymInvTable(k=2, constituents=[["1/2", "1/2"], ["1", "1/2"]]),
    SymInvTable(k=3, tolerance=1e-10, constituents=[
        ["5/12", "1/2", "1/12"],
        ["2/3", "1/2", "1/12"],
        ["3/4", "1/2", "1/12"],
        ["46912496118443/70368744177664", "1/2", "1/12"],
        ["58640620148053/140737488355328", "1/2", "1/12"],
        ["1", "1/2", "1/12"],
    ]),
    SymInvTable(k=4, tolerance=1e-10, acceptance=False, constituents=[
        ["15881834623431/35184372088832", "61572651155457/140737488355328", "5/48", "1/144"],
        ["19/36", "140737488355325/281474976710656", "117281240296107/1125899906842624", "1/144"],
        ["19791209299969/35184372088832", "123145302310909/281474976710656",
         "234562480592215/2251799813685248", "1/144"],
        ["62549994824587/70368744177664", "70368744177667/140737488355328",
         "234562480592215/2251799813685248", "1/144"],
        ["748278746681/2199023255552", "61572651155453/140737488355328", "5/48", "1/144"],
        ["26388279066621/35184372088832", "70368744177665/140737488355328",
         "117281240296107/1125899906842624", "1/144"],
        ["7940917311717/17592186044416", "7/16", "117281240296107/1125899906842624", "1/144"],
        ["6841405683939/8796093022208", "35184372088831/70368744177664",
         "117281240296107/1125899906842624", "1/144"],
        ["9/16", "30786325577729/70368744177664", "29320310074027/281474976710656", "1/144"],
        ["5619726097523/8796093022208", "35184372088831/70368744177664",
         "58640620148053/562949953421312", "1/144"],
        ["2993114986727/8796093022208", "7/16", "117281240296105/1125899906842624", "1/144"],
        ["1", "1/2", "58640620148055/562949953421312", "1/144"],
    ]),
]


def acceptance_rows(table: List) -> List:
    return [row for row in table if getattr(row, "acceptance", False)]
