#include "gysin.hpp"
