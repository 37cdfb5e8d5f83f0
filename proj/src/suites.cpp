#include "suites.hpp"
