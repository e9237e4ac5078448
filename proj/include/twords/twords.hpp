#pragma once

#include "twords/error.hpp"
#include "twords/oracle.hpp"
#include "twords/ordinal.hpp"
#include "twords/product.hpp"
#include "twords/session.hpp"
#include "twords/space.hpp"
#include "twords/syntax.hpp"
#include "twords/word.hpp"
