"""Porter suffix-stripping stemmer.

Implements the classic 1980 algorithm in the variant that became the de
facto standard in reference implementations: words of length <= 2 are
returned unchanged, step 2 uses the -bli and -logi rules, and terminal-y
handling follows the original definition. Conformance is pinned against
the bundled word/stem vector file (tests/data/porter_reference.tsv).
"""

from __future__ import annotations

__all__ = ["PorterStemmer", "porter_stem"]


class PorterStemmer:
    """Stateful buffer implementation; create one instance per thread."""

    def __init__(self) -> None:
        self.b = ""  # word buffer, valid through index k
        self.k = 0
        self.j = 0  # offset marking the candidate stem end

    def _is_consonant(self, i: int) -> bool:
        ch = self.b[i]
        if ch in "aeiou":
            return False
        if ch == "y":
            # y is a consonant at the start or after a vowel
            return i == 0 or not self._is_consonant(i - 1)
        return True

    def _measure(self) -> int:
        """Number of vowel-consonant sequences in b[0:j+1]."""
        i = 0
        while i <= self.j and self._is_consonant(i):
            i += 1
        n = 0
        while True:
            while True:
                if i > self.j:
                    return n
                if self._is_consonant(i):
                    break
                i += 1
            n += 1
            while i <= self.j and self._is_consonant(i):
                i += 1

    def _vowel_in_stem(self) -> bool:
        return any(not self._is_consonant(i) for i in range(self.j + 1))

    def _double_consonant(self, i: int) -> bool:
        return i > 0 and self.b[i] == self.b[i - 1] and self._is_consonant(i)

    def _cvc(self, i: int) -> bool:
        # consonant-vowel-consonant ending where the last consonant is
        # not w, x or y; used to decide whether to restore a final e
        if i < 2 or not self._is_consonant(i) or self._is_consonant(i - 1) or not self._is_consonant(i - 2):
            return False
        return self.b[i] not in "wxy"

    def _ends(self, s: str) -> bool:
        if s[-1] != self.b[self.k]:
            return False
        if len(s) > self.k + 1:
            return False
        if self.b[self.k - len(s) + 1 : self.k + 1] != s:
            return False
        self.j = self.k - len(s)
        return True

    def _set_to(self, s: str) -> None:
        self.b = self.b[: self.j + 1] + s
        self.k = len(self.b) - 1

    def _replace_if_m(self, s: str) -> None:
        if self._measure() > 0:
            self._set_to(s)

    def _step1ab(self) -> None:
        # plurals and -ed / -ing
        if self.b[self.k] == "s":
            if self._ends("sses"):
                self.k -= 2
            elif self._ends("ies"):
                self._set_to("i")
            elif self.b[self.k - 1] != "s":
                self.k -= 1
        if self._ends("eed"):
            if self._measure() > 0:
                self.k -= 1
        elif (self._ends("ed") or self._ends("ing")) and self._vowel_in_stem():
            self.k = self.j
            if self._ends("at"):
                self._set_to("ate")
            elif self._ends("bl"):
                self._set_to("ble")
            elif self._ends("iz"):
                self._set_to("ize")
            elif self._double_consonant(self.k):
                if self.b[self.k - 1] not in "lsz":
                    self.k -= 1
            elif self._measure() == 1 and self._cvc(self.k):
                self._set_to("e")

    def _step1c(self) -> None:
        if self._ends("y") and self._vowel_in_stem():
            self.b = self.b[: self.k] + "i"

    def _step2(self) -> None:
        ch = self.b[self.k - 1]
        if ch == "a":
            if self._ends("ational"):
                self._replace_if_m("ate")
            elif self._ends("tional"):
                self._replace_if_m("tion")
        elif ch == "c":
            if self._ends("enci"):
                self._replace_if_m("ence")
            elif self._ends("anci"):
                self._replace_if_m("ance")
        elif ch == "e":
            if self._ends("izer"):
                self._replace_if_m("ize")
        elif ch == "l":
            if self._ends("bli"):
                self._replace_if_m("ble")
            elif self._ends("alli"):
                self._replace_if_m("al")
            elif self._ends("entli"):
                self._replace_if_m("ent")
            elif self._ends("eli"):
                self._replace_if_m("e")
            elif self._ends("ousli"):
                self._replace_if_m("ous")
        elif ch == "o":
            if self._ends("ization"):
                self._replace_if_m("ize")
            elif self._ends("ation"):
                self._replace_if_m("ate")
            elif self._ends("ator"):
                self._replace_if_m("ate")
        elif ch == "s":
            if self._ends("alism"):
                self._replace_if_m("al")
            elif self._ends("iveness"):
                self._replace_if_m("ive")
            elif self._ends("fulness"):
                self._replace_if_m("ful")
            elif self._ends("ousness"):
                self._replace_if_m("ous")
        elif ch == "t":
            if self._ends("aliti"):
                self._replace_if_m("al")
            elif self._ends("iviti"):
                self._replace_if_m("ive")
            elif self._ends("biliti"):
                self._replace_if_m("ble")
        elif ch == "g":
            if self._ends("logi"):
                self._replace_if_m("log")

    def _step3(self) -> None:
        ch = self.b[self.k]
        if ch == "e":
            if self._ends("icate"):
                self._replace_if_m("ic")
            elif self._ends("ative"):
                self._replace_if_m("")
            elif self._ends("alize"):
                self._replace_if_m("al")
        elif ch == "i":
            if self._ends("iciti"):
                self._replace_if_m("ic")
        elif ch == "l":
            if self._ends("ical"):
                self._replace_if_m("ic")
            elif self._ends("ful"):
                self._replace_if_m("")
        elif ch == "s":
            if self._ends("ness"):
                self._replace_if_m("")

    def _step4(self) -> None:
        ch = self.b[self.k - 1]
        if ch == "a":
            if not self._ends("al"):
                return
        elif ch == "c":
            if not self._ends("ance") and not self._ends("ence"):
                return
        elif ch == "e":
            if not self._ends("er"):
                return
        elif ch == "i":
            if not self._ends("ic"):
                return
        elif ch == "l":
            if not self._ends("able") and not self._ends("ible"):
                return
        elif ch == "n":
            if not (self._ends("ant") or self._ends("ement") or self._ends("ment") or self._ends("ent")):
                return
        elif ch == "o":
            if self._ends("ion") and self.b[self.j] in "st":
                pass
            elif not self._ends("ou"):
                return
        elif ch == "s":
            if not self._ends("ism"):
                return
        elif ch == "t":
            if not self._ends("ate") and not self._ends("iti"):
                return
        elif ch == "u":
            if not self._ends("ous"):
                return
        elif ch == "v":
            if not self._ends("ive"):
                return
        elif ch == "z":
            if not self._ends("ize"):
                return
        else:
            return
        if self._measure() > 1:
            self.k = self.j

    def _step5(self) -> None:
        self.j = self.k
        if self.b[self.k] == "e":
            m = self._measure()
            if m > 1 or (m == 1 and not self._cvc(self.k - 1)):
                self.k -= 1
        if self.b[self.k] == "l" and self._double_consonant(self.k) and self._measure() > 1:
            self.k -= 1

    def stem(self, word: str) -> str:
        if len(word) <= 2:
            return word
        self.b = word
        self.k = len(word) - 1
        self.j = 0
        self._step1ab()
        self._step1c()
        self._step2()
        self._step3()
        self._step4()
        self._step5()
        return self.b[: self.k + 1]


def porter_stem(word: str) -> str:
    """Stem a single lowercase word.

    Input that is not purely a-z (digits, hyphens, non-ASCII letters) is
    returned unchanged, as are words of length <= 2.
    """
    if not word or not all("a" <= ch <= "z" for ch in word):
        return word
    return PorterStemmer().stem(word)
