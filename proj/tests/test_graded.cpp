#include <doctest.h>

#include "gmcat/stock.hpp"

TEST_CASE("placeholder") { CHECK(true); }
