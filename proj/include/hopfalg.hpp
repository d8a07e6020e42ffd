#pragma once

#include "hopfalg/constructions.hpp"
#include "hopfalg/frobenius.hpp"
#include "hopfalg/hopfmodule.hpp"
#include "hopfalg/integrals.hpp"
#include "hopfalg/io.hpp"
#include "hopfalg/maschke.hpp"
#include "hopfalg/qf.hpp"
