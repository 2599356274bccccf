from .sexpr import Alphabet, Word, parse_word, enumerate_words
