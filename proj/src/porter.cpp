// Copyright 2026 The edumine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <string_view>

#include "edumine/preprocess.hpp"

namespace edumine {
namespace {

// Porter's suffix-stripping algorithm, following the reference C
// implementation (including its "bli" -> "ble" and "logi" -> "log"
// departures from the 1980 rule tables). `k` is the index of the last
// character of the current word, `j` the end of the stem under test.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word)
      : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string run() {
    step1ab();
    if (k_ > 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    return b_.substr(0, static_cast<std::size_t>(k_ + 1));
  }

 private:
  bool cons(int i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int i) const {
    return i >= 1 && b_[i] == b_[i - 1] && cons(i);
  }

  // consonant-vowel-consonant ending at i, final consonant not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (std::string_view(b_).substr(k_ + 1 - len, len) != s) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(j_ + 1, k_ - j_, s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void replace_if_m_positive(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  // Plurals and -ed / -ing.
  void step1ab() {
    if (b_[k_] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (k_ >= 1 && b_[k_ - 1] != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(k_)) {
        --k_;
        const char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  // Terminal y -> i when there is another vowel in the stem.
  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
  }

  // Tries each (suffix, replacement) in order; the first suffix that
  // matches decides, whether or not its m() condition holds.
  template <std::size_t N>
  void first_match(const std::pair<std::string_view, std::string_view> (
      &rules)[N]) {
    for (const auto& [suffix, replacement] : rules) {
      if (ends(suffix)) {
        replace_if_m_positive(replacement);
        return;
      }
    }
  }

  // Double suffixes to single ones.
  void step2() {
    if (k_ < 1) return;
    using R = std::pair<std::string_view, std::string_view>;
    switch (b_[k_ - 1]) {
      case 'a': {
        static constexpr R kRules[] = {{"ational", "ate"}, {"tional", "tion"}};
        first_match(kRules);
        break;
      }
      case 'c': {
        static constexpr R kRules[] = {{"enci", "ence"}, {"anci", "ance"}};
        first_match(kRules);
        break;
      }
      case 'e': {
        static constexpr R kRules[] = {{"izer", "ize"}};
        first_match(kRules);
        break;
      }
      case 'l': {
        static constexpr R kRules[] = {{"bli", "ble"},
                                       {"alli", "al"},
                                       {"entli", "ent"},
                                       {"eli", "e"},
                                       {"ousli", "ous"}};
        first_match(kRules);
        break;
      }
      case 'o': {
        static constexpr R kRules[] = {
            {"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
        first_match(kRules);
        break;
      }
      case 's': {
        static constexpr R kRules[] = {{"alism", "al"},
                                       {"iveness", "ive"},
                                       {"fulness", "ful"},
                                       {"ousness", "ous"}};
        first_match(kRules);
        break;
      }
      case 't': {
        static constexpr R kRules[] = {
            {"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
        first_match(kRules);
        break;
      }
      case 'g': {
        static constexpr R kRules[] = {{"logi", "log"}};
        first_match(kRules);
        break;
      }
      default:
        break;
    }
  }

  // -ic-, -full, -ness etc.
  void step3() {
    using R = std::pair<std::string_view, std::string_view>;
    switch (b_[k_]) {
      case 'e': {
        static constexpr R kRules[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        first_match(kRules);
        break;
      }
      case 'i': {
        static constexpr R kRules[] = {{"iciti", "ic"}};
        first_match(kRules);
        break;
      }
      case 'l': {
        static constexpr R kRules[] = {{"ical", "ic"}, {"ful", ""}};
        first_match(kRules);
        break;
      }
      case 's': {
        static constexpr R kRules[] = {{"ness", ""}};
        first_match(kRules);
        break;
      }
      default:
        break;
    }
  }

  bool ends_any(std::initializer_list<std::string_view> suffixes) {
    for (std::string_view s : suffixes) {
      if (ends(s)) return true;
    }
    return false;
  }

  // Strips -ant, -ence etc. in context <c>vcvc<v>.
  void step4() {
    if (k_ < 1) return;
    bool matched = false;
    switch (b_[k_ - 1]) {
      case 'a': matched = ends_any({"al"}); break;
      case 'c': matched = ends_any({"ance", "ence"}); break;
      case 'e': matched = ends_any({"er"}); break;
      case 'i': matched = ends_any({"ic"}); break;
      case 'l': matched = ends_any({"able", "ible"}); break;
      case 'n': matched = ends_any({"ant", "ement", "ment", "ent"}); break;
      case 'o':
        if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) {
          matched = true;
        } else {
          matched = ends("ou");
        }
        break;
      case 's': matched = ends_any({"ism"}); break;
      case 't': matched = ends_any({"ate", "iti"}); break;
      case 'u': matched = ends_any({"ous"}); break;
      case 'v': matched = ends_any({"ive"}); break;
      case 'z': matched = ends_any({"ize"}); break;
      default: break;
    }
    if (matched && m() > 1) k_ = j_;
  }

  // Final -e and -ll.
  void step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (b_[k_] == 'l' && double_cons(k_) && m() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  for (char c : word) {
    if (c < 'a' || c > 'z') return std::string(word);
  }
  return PorterStemmer(word).run();
}

}  // namespace edumine
