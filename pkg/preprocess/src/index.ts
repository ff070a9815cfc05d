export { cleanText, CLEANUP_RULES } from './clean';
export { splitSentences, tokenize } from './tokenize';
export { parseSentence, tagToken, validateParse, MODELS } from './parse';
export type { ParsedToken } from './parse';
export { convertArticle, convertCorpus, renderConllu } from './convert';
export type { RawArticle, CorpusRecord, ConvertCounts } from './convert';
