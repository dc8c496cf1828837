#include <gtest/gtest.h>

#include "sbm/excitation.hpp"

using sbm::Excitation;

TEST(Excitation, IntegerAndHalfInteger) {
  EXPECT_EQ(Excitation::integer(3).twice(), 6);
  EXPECT_TRUE(Excitation::integer(-1).is_integer());
  EXPECT_FALSE(Excitation::lowest(3).is_integer());
  EXPECT_DOUBLE_EQ(Excitation::lowest(3).value(), -1.5);
}

TEST(Excitation, Stepping) {
  const Excitation start = Excitation::lowest(3);
  EXPECT_EQ(start.next(), Excitation::from_twice(-1));
  EXPECT_EQ(start.shifted(4).prev(), start.shifted(3));
  EXPECT_EQ(start.shifted(5).steps_above(start), 5);
  EXPECT_LT(start, start.next());
}

TEST(Excitation, Printing) {
  EXPECT_EQ(Excitation::integer(2).str(), "2");
  EXPECT_EQ(Excitation::integer(-1).str(), "-1");
  EXPECT_EQ(Excitation::from_twice(-3).str(), "-3/2");
  EXPECT_EQ(Excitation::from_twice(1).str(), "1/2");
}
