/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Query corpus shared by the parser unit tests and the acceptance suite.

namespace skyline::corpus {

inline const char *kRoundTrip[] = {
    "SELECT * FROM t",
    "SELECT a FROM t",
    "SELECT a, b FROM t",
    "SELECT a, b, c FROM table1",
    "select lower_case from t2",
    "SELECT MixedCase FROM T",
    "SELECT * FROM t;",
    "SELECT * FROM t WHERE a = 1",
    "SELECT * FROM t WHERE a <> 1",
    "SELECT * FROM t WHERE a != 1",
    "SELECT * FROM t WHERE a < 5",
    "SELECT * FROM t WHERE a <= 5",
    "SELECT * FROM t WHERE a > 5",
    "SELECT * FROM t WHERE a >= 5",
    "SELECT * FROM t WHERE a = -3",
    "SELECT * FROM t WHERE a = +3",
    "SELECT * FROM t WHERE price < 1.5",
    "SELECT * FROM t WHERE price < 1.5e3",
    "SELECT * FROM t WHERE price < 0.25e-2",
    "SELECT * FROM t WHERE name = 'alice'",
    "SELECT * FROM t WHERE name = 'it''s'",
    "SELECT * FROM t WHERE name = ''",
    "SELECT * FROM t WHERE active = true",
    "SELECT * FROM t WHERE active = FALSE",
    "SELECT * FROM t WHERE 5 > a",
    "SELECT * FROM t WHERE a = 1 AND b = 2",
    "SELECT * FROM t WHERE a = 1 OR b = 2",
    "SELECT * FROM t WHERE a = 1 AND b = 2 OR c = 3",
    "SELECT * FROM t WHERE a = 1 OR b = 2 AND c = 3",
    "SELECT * FROM t WHERE (a = 1 OR b = 2) AND c = 3",
    "SELECT * FROM t WHERE NOT a = 1",
    "SELECT * FROM t WHERE NOT (a = 1 AND b = 2)",
    "SELECT * FROM t WHERE NOT NOT a = 1",
    "SELECT price, user_rating FROM hotels SKYLINE OF price MIN, user_rating MAX",
    "SELECT * FROM t SKYLINE OF x MIN",
    "SELECT * FROM t SKYLINE OF x MAX",
    "SELECT * FROM t SKYLINE OF x DIFF, y MIN",
    "SELECT * FROM t SKYLINE OF DISTINCT x MIN",
    "SELECT * FROM t SKYLINE OF COMPLETE x MIN",
    "SELECT * FROM t SKYLINE OF DISTINCT COMPLETE x MIN",
    "SELECT * FROM t SKYLINE OF distinct complete x min",
    "SELECT a FROM t SKYLINE OF b MIN",
    "SELECT a, b FROM t SKYLINE OF a MIN, b MAX, c DIFF",
    "SELECT * FROM t WHERE a > 0 SKYLINE OF a MIN",
    "SELECT * FROM t WHERE a > 0 AND b < 9 SKYLINE OF a MIN, b MAX",
    "SELECT * FROM t ORDER BY a",
    "SELECT * FROM t ORDER BY a ASC",
    "SELECT * FROM t ORDER BY a DESC",
    "SELECT * FROM t SKYLINE OF x MIN ORDER BY x DESC",
    "SELECT price, user_rating FROM hotels WHERE price < 100 SKYLINE OF DISTINCT price MIN, "
    "user_rating MAX ORDER BY price ASC",
    "SELECT * FROM t WHERE a = 1 AND b = 2 AND c = 3 AND d = 4",
    "SELECT skyline_col FROM of_table",
    "  SELECT   *   FROM   t  ",
};

struct NegativeCase {
  const char *query;
  const char *message_fragment;
};

inline const NegativeCase kNegative[] = {
    {"SELECT * FROM t SKYLINE OF x", "expected MIN, MAX or DIFF"},
    {"SELECT * FROM t SKYLINE OF x MIN, y", "expected MIN, MAX or DIFF"},
    {"SELECT * FROM t SKYLINE OF", "expected skyline dimension"},
    {"SELECT * FROM t SKYLINE OF DISTINCT DISTINCT x MIN", "duplicate DISTINCT"},
    {"SELECT * FROM t SKYLINE OF COMPLETE COMPLETE x MIN", "duplicate COMPLETE"},
    {"SELECT * FROM t SKYLINE OF COMPLETE DISTINCT x MIN", "DISTINCT must come before COMPLETE"},
    {"SELECT * FROM t ORDER BY a SKYLINE OF x MIN", "SKYLINE OF must come before ORDER BY"},
    {"SELECT * FROM t SKYLINE x MIN", "expected OF"},
    {"SELECT FROM t", "expected column name or *"},
    {"SELECT * FROM", "expected table name"},
    {"SELECT * t", "expected FROM"},
    {"SELECT * FROM t WHERE", "expected literal"},
    {"SELECT * FROM t WHERE a <", "expected literal"},
    {"SELECT * FROM t WHERE a 1", "expected comparison operator"},
    {"SELECT * FROM t WHERE (a = 1", "expected ')'"},
    {"SELECT * FROM t GROUP BY a", "unsupported feature: GROUP BY"},
    {"SELECT * FROM t HAVING a = 1", "unsupported feature: HAVING"},
    {"SELECT * FROM t JOIN u", "unsupported feature: JOIN"},
    {"SELECT * FROM t, u", "unsupported feature: multiple tables"},
    {"SELECT count(a) FROM t", "unsupported feature: expressions"},
    {"SELECT * FROM t extra", "unexpected trailing input"},
    {"SELECT * FROM t WHERE name = 'unterminated", "unterminated string literal"},
    {"SELECT * FROM t WHERE a = 99999999999999999999", "out of range"},
    {"SELECT * FROM t WHERE a ?? 1", "illegal character"},
};

}  // namespace skyline::corpus
