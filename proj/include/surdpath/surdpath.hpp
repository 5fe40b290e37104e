#pragma once

#include "surdpath/cf.hpp"
#include "surdpath/checks.hpp"
#include "surdpath/errors.hpp"
#include "surdpath/int_util.hpp"
#include "surdpath/lpp.hpp"
#include "surdpath/oracle.hpp"
#include "surdpath/parse.hpp"
#include "surdpath/render.hpp"
#include "surdpath/surd.hpp"
